#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotor {

// Parses argv-style arguments (no program name), runs one subcommand, writes
// results to `out` and diagnostics to `err`, and returns the exit status.
// Module errors print a one-line JSON object on `err` and yield status 1.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace rotor
