#include "rotor/rotor_system.hpp"

#include <algorithm>

namespace rotor {

namespace {

void require_non_target(const Multigraph& g, VertexId v) {
    if (g.is_target(v)) {
        throw Error(ErrorCode::TargetVertex,
                    "vertex '" + g.label(v) + "' is a target and has no rotor");
    }
}

}  // namespace

RotorSystem::RotorSystem(std::shared_ptr<const Multigraph> graph)
    : graph_(std::move(graph)) {
    order_.reserve(static_cast<size_t>(graph_->non_target_count()));
    for (VertexId v : graph_->non_targets()) order_.push_back(graph_->out_heads(v));
}

RotorSystem::RotorSystem(std::shared_ptr<const Multigraph> graph,
                         std::vector<std::vector<VertexId>> order)
    : graph_(std::move(graph)), order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != graph_->non_target_count()) {
        throw Error(ErrorCode::InvalidMechanism,
                    "need one mechanism order per non-target vertex");
    }
    for (int k = 0; k < graph_->non_target_count(); ++k) {
        const VertexId v = graph_->v0_vertex(k);
        auto got = order_[static_cast<size_t>(k)];
        auto want = graph_->out_heads(v);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            throw Error(ErrorCode::InvalidMechanism,
                        "mechanism at '" + graph_->label(v) +
                            "' is not a permutation of its out-arcs");
        }
    }
}

const std::vector<VertexId>& RotorSystem::mechanism(VertexId v) const {
    require_non_target(*graph_, v);
    return order_[static_cast<size_t>(graph_->v0_index(v))];
}

VertexId RotorSystem::mechanism_head(VertexId v, int slot) const {
    return mechanism(v)[static_cast<size_t>(slot - 1)];
}

Arc RotorSystem::mechanism_arc(VertexId v, int slot) const {
    return Arc{v, slot, mechanism_head(v, slot)};
}

bool RotorSystem::operator==(const RotorSystem& other) const {
    return *graph_ == *other.graph_ && order_ == other.order_;
}

RotorConfiguration initial_configuration(const RotorSystem& sys) {
    const Multigraph& g = sys.graph();
    std::vector<int> slots(static_cast<size_t>(g.non_target_count()));
    for (int k = 0; k < g.non_target_count(); ++k) {
        slots[static_cast<size_t>(k)] = g.out_degree(g.v0_vertex(k));
    }
    return RotorConfiguration{std::move(slots)};
}

RotorConfiguration progress(const RotorSystem& sys, const RotorConfiguration& rho,
                            VertexId v) {
    const Multigraph& g = sys.graph();
    require_non_target(g, v);
    const auto k = static_cast<size_t>(g.v0_index(v));
    RotorConfiguration out = rho;
    out.slots[k] = out.slots[k] % g.out_degree(v) + 1;
    return out;
}

RotorConfiguration regress(const RotorSystem& sys, const RotorConfiguration& rho,
                           VertexId v) {
    const Multigraph& g = sys.graph();
    require_non_target(g, v);
    const auto k = static_cast<size_t>(g.v0_index(v));
    const int d = g.out_degree(v);
    RotorConfiguration out = rho;
    out.slots[k] = (out.slots[k] + d - 2) % d + 1;
    return out;
}

Arc retrospective_arc(const RotorSystem& sys, const RotorConfiguration& rho,
                      VertexId v) {
    require_non_target(sys.graph(), v);
    const int slot = rho.slots[static_cast<size_t>(sys.graph().v0_index(v))];
    return sys.mechanism_arc(v, slot);
}

Arc prospective_arc(const RotorSystem& sys, const RotorConfiguration& rho,
                    VertexId v) {
    const Multigraph& g = sys.graph();
    require_non_target(g, v);
    const int slot = rho.slots[static_cast<size_t>(g.v0_index(v))];
    return sys.mechanism_arc(v, slot % g.out_degree(v) + 1);
}

RotorSystem reverse_mechanisms(const RotorSystem& sys) {
    const Multigraph& g = sys.graph();
    std::vector<std::vector<VertexId>> order;
    order.reserve(static_cast<size_t>(g.non_target_count()));
    for (VertexId v : g.non_targets()) {
        auto mech = sys.mechanism(v);
        std::reverse(mech.begin(), mech.end());
        order.push_back(std::move(mech));
    }
    return RotorSystem(sys.graph_ptr(), std::move(order));
}

FlippedSystem flip(const RotorSystem& sys, const RotorConfiguration& rho) {
    const Multigraph& g = sys.graph();
    RotorConfiguration flipped = rho;
    for (int k = 0; k < g.non_target_count(); ++k) {
        const int d = g.out_degree(g.v0_vertex(k));
        const int i = rho.slots[static_cast<size_t>(k)];
        // Old slot i maps to new slot d - i, with 0 wrapping to d. In the
        // reversed order that is the old prospective arc e^(i+1).
        flipped.slots[static_cast<size_t>(k)] = (i == d) ? d : d - i;
    }
    return FlippedSystem{reverse_mechanisms(sys), std::move(flipped)};
}

}  // namespace rotor
