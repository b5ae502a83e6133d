#include "rotor/dot_export.hpp"

#include <sstream>

namespace rotor {

namespace {

std::string quoted(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string export_dot(const RotorSystem& sys, const RotorConfiguration& rho,
                       const std::optional<RotorCycle>& highlight) {
    const Multigraph& g = sys.graph();
    std::vector<bool> on_cycle(static_cast<size_t>(g.vertex_count()), false);
    if (highlight) {
        for (VertexId v : highlight->vertices) on_cycle[static_cast<size_t>(v)] = true;
    }

    std::ostringstream out;
    out << "digraph rotor_walk {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << quoted(g.label(v));
        if (g.is_target(v)) {
            out << " [style=filled, fillcolor=lightgray]";
        } else if (v == g.source()) {
            out << " [shape=doublecircle]";
        }
        out << ";\n";
    }
    for (VertexId v : g.non_targets()) {
        const int retro = rho.slots[static_cast<size_t>(g.v0_index(v))];
        for (int slot = 1; slot <= g.out_degree(v); ++slot) {
            out << "  " << quoted(g.label(v)) << " -> "
                << quoted(g.label(sys.mechanism_head(v, slot)));
            out << " [label=" << quoted(std::to_string(slot));
            if (slot == retro) {
                out << ", penwidth=2.4";
                if (on_cycle[static_cast<size_t>(v)]) out << ", color=red";
            } else {
                out << ", color=gray60";
            }
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace rotor
