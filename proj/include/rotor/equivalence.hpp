#pragma once

#include <optional>
#include <vector>

#include "rotor/walk.hpp"

namespace rotor {

// An oriented cycle of the retrospective arcs: rho(vertices[j]) heads to
// vertices[(j+1) mod r]. Vertices are distinct; r = 1 is a retro self-loop.
struct RotorCycle {
    std::vector<VertexId> vertices;

    bool operator==(const RotorCycle&) const = default;
};

// Some cycle of the functional graph v -> head(rho(v)) on V0, or nullopt when
// acyclic. Deterministic: the returned cycle is the one through the lowest-id
// vertex lying on any cycle, listed starting from that vertex.
std::optional<RotorCycle> find_cycle(const RotorSystem& sys,
                                     const RotorConfiguration& rho);

bool is_acyclic(const RotorSystem& sys, const RotorConfiguration& rho);

// Regress every rotor on C; throws Error(NotACycle) unless C is a cycle of rho.
RotorConfiguration push_cycle(const RotorSystem& sys, const RotorConfiguration& rho,
                              const RotorCycle& cycle);

// Progress the rotor at every vertex of the set (duplicates progress twice).
RotorConfiguration pop_set(const RotorSystem& sys, const RotorConfiguration& rho,
                           const std::vector<VertexId>& vertices);

// Defensive cap on total per-vertex pushes: (sum of d(v)) * |V0| * 4.
long long default_push_budget(const Multigraph& g);

// Push cycles until none remain. The result is the canonical acyclic form of
// rho's equivalence class, independently of which cycle is pushed when.
// Throws Error(PushBudgetExceeded) past the cap (pass 0 for the default).
RotorConfiguration complete_cycle_pushing(const RotorSystem& sys,
                                          const RotorConfiguration& rho,
                                          long long push_budget = 0);

// Same canonical acyclic form.
bool equivalent(const RotorSystem& sys, const RotorConfiguration& a,
                const RotorConfiguration& b);

// Repeatedly remove the first cycle (minimal q with x_q = x_p, p < q) until
// the path is simple; erased cycles are reported in erasure order.
struct LoopErasure {
    std::vector<VertexId> simple_path;
    std::vector<std::vector<VertexId>> erased_cycles;
};

LoopErasure loop_erasure(const std::vector<VertexId>& path);

// The walk of one particle added at a vertex, decomposed into the cycles its
// loop-erasure removes plus the residual simple path gamma (target excluded).
// Popping the cycle vertex sets and then gamma reproduces E+_v exactly.
struct PoppingScript {
    std::vector<RotorCycle> cycles;  // in erasure order
    std::vector<VertexId> gamma;     // simple path minus the final target
    VertexId target;
};

PoppingScript popping_decomposition(const RotorSystem& sys,
                                    const RotorConfiguration& rho, VertexId v);

// Applies the script to rho: pop the last-erased cycle first, then earlier
// ones, then gamma. (Pops at distinct vertices commute, so the order only
// mirrors the written composition.)
RotorConfiguration replay_popping(const RotorSystem& sys, const RotorConfiguration& rho,
                                  const PoppingScript& script);

}  // namespace rotor
