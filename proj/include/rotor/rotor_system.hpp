#pragma once

#include <memory>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

// Retrospective rotor state: slots[k] in 1..d(v) is the mechanism position of
// the most recent exit arc at the k-th non-target vertex (dense V0 index).
// A plain value; compare/copy freely.
struct RotorConfiguration {
    std::vector<int> slots;

    auto operator<=>(const RotorConfiguration&) const = default;
};

// A multigraph together with one mechanism ordering per non-target vertex.
// The one-argument constructor adopts the graph's own out-arc order; reversal
// keeps the graph and relabels slots j -> d(v)+1-j.
class RotorSystem {
public:
    explicit RotorSystem(std::shared_ptr<const Multigraph> graph);

    // Custom mechanism orders, indexed by V0 index. Each must be a
    // permutation-with-multiplicity of that vertex's out-heads; throws
    // Error(InvalidMechanism) otherwise.
    RotorSystem(std::shared_ptr<const Multigraph> graph,
                std::vector<std::vector<VertexId>> order);

    const Multigraph& graph() const { return *graph_; }
    const std::shared_ptr<const Multigraph>& graph_ptr() const { return graph_; }

    // Mechanism head sequence at v; throws Error(TargetVertex) for targets.
    const std::vector<VertexId>& mechanism(VertexId v) const;
    VertexId mechanism_head(VertexId v, int slot) const;  // slot 1-based
    Arc mechanism_arc(VertexId v, int slot) const;

    bool operator==(const RotorSystem& other) const;

private:
    std::shared_ptr<const Multigraph> graph_;
    std::vector<std::vector<VertexId>> order_;  // by V0 index
};

// Pointer at position 0: retro(v) = slot d(v), so the first exit uses slot 1.
RotorConfiguration initial_configuration(const RotorSystem& sys);

// Cyclic slot increment / decrement at v. Throw Error(TargetVertex) when v is
// a target; leave every other vertex untouched.
RotorConfiguration progress(const RotorSystem& sys, const RotorConfiguration& rho,
                            VertexId v);
RotorConfiguration regress(const RotorSystem& sys, const RotorConfiguration& rho,
                           VertexId v);

// The most recent exit arc rho(v), and the next one the rotor will use.
Arc retrospective_arc(const RotorSystem& sys, const RotorConfiguration& rho, VertexId v);
Arc prospective_arc(const RotorSystem& sys, const RotorConfiguration& rho, VertexId v);

// Same graph, every mechanism order reversed. An involution.
RotorSystem reverse_mechanisms(const RotorSystem& sys);

// Result of a stack flip. The configuration is expressed in the reversed
// system's slot coordinates, so the pair must travel together.
struct FlippedSystem {
    RotorSystem system;
    RotorConfiguration config;
};

// Exchanges past and future at every vertex: the flipped retrospective arc is
// the old prospective one. flip(flip(sys, rho)) restores (sys, rho).
FlippedSystem flip(const RotorSystem& sys, const RotorConfiguration& rho);

}  // namespace rotor
