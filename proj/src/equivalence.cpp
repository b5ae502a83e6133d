#include "rotor/equivalence.hpp"

#include <algorithm>

namespace rotor {

namespace {

// head(rho(v)) for v in V0.
VertexId retro_head(const RotorSystem& sys, const RotorConfiguration& rho, VertexId v) {
    const Multigraph& g = sys.graph();
    return sys.mechanism_head(v, rho.slots[static_cast<size_t>(g.v0_index(v))]);
}

}  // namespace

std::optional<RotorCycle> find_cycle(const RotorSystem& sys,
                                     const RotorConfiguration& rho) {
    const Multigraph& g = sys.graph();
    const int n = g.vertex_count();
    // Colors: 0 unvisited, 1 on the current chain, 2 settled. Walking the
    // single retro pointer settles each vertex once, so every cycle of the
    // functional graph is discovered exactly once. Cycles are disjoint; the
    // chosen one is the cycle through the lowest-id on-cycle vertex.
    std::vector<int> color(static_cast<size_t>(n), 0);
    std::optional<RotorCycle> best;
    for (VertexId start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] != 0 || g.is_target(start)) continue;
        std::vector<VertexId> chain;
        VertexId v = start;
        while (!g.is_target(v) && color[static_cast<size_t>(v)] == 0) {
            color[static_cast<size_t>(v)] = 1;
            chain.push_back(v);
            v = retro_head(sys, rho, v);
        }
        if (!g.is_target(v) && color[static_cast<size_t>(v)] == 1) {
            // Closed back onto the current chain: the tail from v is a cycle.
            auto at = std::find(chain.begin(), chain.end(), v);
            RotorCycle cycle{std::vector<VertexId>(at, chain.end())};
            // List it from its lowest-id member.
            auto low = std::min_element(cycle.vertices.begin(), cycle.vertices.end());
            std::rotate(cycle.vertices.begin(), low, cycle.vertices.end());
            if (!best || cycle.vertices.front() < best->vertices.front()) {
                best = std::move(cycle);
            }
        }
        for (VertexId u : chain) color[static_cast<size_t>(u)] = 2;
    }
    return best;
}

bool is_acyclic(const RotorSystem& sys, const RotorConfiguration& rho) {
    return !find_cycle(sys, rho).has_value();
}

RotorConfiguration push_cycle(const RotorSystem& sys, const RotorConfiguration& rho,
                              const RotorCycle& cycle) {
    const Multigraph& g = sys.graph();
    const auto& vs = cycle.vertices;
    if (vs.empty()) throw Error(ErrorCode::NotACycle, "empty vertex list");
    for (size_t j = 0; j < vs.size(); ++j) {
        const VertexId v = vs[j];
        if (g.is_target(v)) {
            throw Error(ErrorCode::NotACycle,
                        "target '" + g.label(v) + "' cannot lie on a rotor cycle");
        }
        if (std::count(vs.begin(), vs.end(), v) != 1) {
            throw Error(ErrorCode::NotACycle,
                        "vertex '" + g.label(v) + "' repeats in the cycle");
        }
        const VertexId expected = vs[(j + 1) % vs.size()];
        if (retro_head(sys, rho, v) != expected) {
            throw Error(ErrorCode::NotACycle,
                        "rho at '" + g.label(v) + "' does not point to '" +
                            g.label(expected) + "'");
        }
    }
    RotorConfiguration out = rho;
    for (VertexId v : vs) out = regress(sys, out, v);
    return out;
}

RotorConfiguration pop_set(const RotorSystem& sys, const RotorConfiguration& rho,
                           const std::vector<VertexId>& vertices) {
    RotorConfiguration out = rho;
    for (VertexId v : vertices) out = progress(sys, out, v);
    return out;
}

long long default_push_budget(const Multigraph& g) {
    return g.total_out_degree() * g.non_target_count() * 4;
}

RotorConfiguration complete_cycle_pushing(const RotorSystem& sys,
                                          const RotorConfiguration& rho,
                                          long long push_budget) {
    const long long cap = push_budget > 0 ? push_budget : default_push_budget(sys.graph());
    RotorConfiguration out = rho;
    long long pushed = 0;
    while (auto cycle = find_cycle(sys, out)) {
        pushed += static_cast<long long>(cycle->vertices.size());
        if (pushed > cap) {
            throw Error(ErrorCode::PushBudgetExceeded,
                        "cycle pushing exceeded " + std::to_string(cap) + " pushes");
        }
        out = push_cycle(sys, out, *cycle);
    }
    return out;
}

bool equivalent(const RotorSystem& sys, const RotorConfiguration& a,
                const RotorConfiguration& b) {
    return complete_cycle_pushing(sys, a) == complete_cycle_pushing(sys, b);
}

LoopErasure loop_erasure(const std::vector<VertexId>& path) {
    LoopErasure out;
    std::vector<int> pos_on_stack;  // parallel to simple_path
    // pos[v] = index of v on the current stack, -1 if absent. Vertex ids are
    // dense, but the path may be empty.
    int max_id = -1;
    for (VertexId v : path) max_id = std::max(max_id, v);
    std::vector<int> pos(static_cast<size_t>(max_id + 1), -1);

    auto& stack = out.simple_path;
    for (VertexId v : path) {
        const int p = pos[static_cast<size_t>(v)];
        if (p >= 0) {
            // First cycle closes here: erase stack[p..end], keep one copy of v.
            out.erased_cycles.emplace_back(stack.begin() + p, stack.end());
            for (size_t i = static_cast<size_t>(p) + 1; i < stack.size(); ++i) {
                pos[static_cast<size_t>(stack[i])] = -1;
            }
            stack.resize(static_cast<size_t>(p) + 1);
        } else {
            pos[static_cast<size_t>(v)] = static_cast<int>(stack.size());
            stack.push_back(v);
        }
    }
    return out;
}

PoppingScript popping_decomposition(const RotorSystem& sys,
                                    const RotorConfiguration& rho, VertexId v) {
    const WalkTrace trace = walk_to_target(sys, rho, v);
    LoopErasure erased = loop_erasure(trace.path);
    PoppingScript script;
    script.target = trace.target;
    script.cycles.reserve(erased.erased_cycles.size());
    for (auto& cycle : erased.erased_cycles) {
        script.cycles.push_back(RotorCycle{std::move(cycle)});
    }
    script.gamma = std::move(erased.simple_path);
    script.gamma.pop_back();  // the final target carries no rotor
    return script;
}

RotorConfiguration replay_popping(const RotorSystem& sys, const RotorConfiguration& rho,
                                  const PoppingScript& script) {
    RotorConfiguration out = rho;
    for (auto it = script.cycles.rbegin(); it != script.cycles.rend(); ++it) {
        out = pop_set(sys, out, it->vertices);
    }
    return pop_set(sys, out, script.gamma);
}

}  // namespace rotor
