#pragma once

#include <optional>
#include <string>

#include "rotor/equivalence.hpp"

namespace rotor {

// Graphviz rendering of a rotor configuration: every arc in mechanism order
// (slot as edge label), retrospective arcs bold, the highlighted cycle's
// retrospective arcs red, targets shaded, the source double-circled. Output
// is byte-stable for identical inputs.
std::string export_dot(const RotorSystem& sys, const RotorConfiguration& rho,
                       const std::optional<RotorCycle>& highlight = std::nullopt);

}  // namespace rotor
