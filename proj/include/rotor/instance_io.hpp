#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rotor/rotor_system.hpp"

namespace rotor {

// A parsed instance file: the system, the (possibly defaulted) rotor state,
// and optional settings the CLI folds in unless overridden by flags.
struct Instance {
    RotorSystem system;
    RotorConfiguration state;
    std::optional<uint64_t> seed;
    std::optional<long long> step_budget;
    std::optional<long long> push_budget;
    std::optional<long long> orbit_budget;

    bool operator==(const Instance&) const = default;
};

// Line-oriented text format ('#' starts a comment):
//
//   vertices 1 2 3 4 5
//   source 1
//   targets 4 5
//   rotor 1: 3 4 5
//   rotor 2: 3
//   rotor 3: 4 2
//   state 1: 2          # optional; omitted states default to slot d(v)
//   seed 42             # optional
//   budget steps 5000   # optional; also: budget pushes N, budget orbit N
//
// Malformed syntax raises Error(ParseError) and semantic violations raise
// Error(ValidationError), both carrying 1-based line/column positions;
// graph-construction failures are re-thrown as ValidationError with the
// original code named in the message.
Instance parse_instance(const std::string& text);

// Canonical rendering: declaration-order vertices, ascending rotor and state
// lines, then any settings. parse_instance(render_instance(x)) == x.
std::string render_instance(const Instance& instance);

// Reads and parses a file; file-system failures raise Error(ParseError).
Instance load_instance(const std::string& path);

}  // namespace rotor
