#include "rotor/sandpile.hpp"

#include <limits>
#include <map>

namespace rotor {

namespace {

constexpr long long kSaturated = std::numeric_limits<long long>::max() / 2;

void topple_inplace(const Multigraph& g, std::vector<long long>& counts, VertexId v) {
    const auto k = static_cast<size_t>(g.v0_index(v));
    counts[k] -= g.out_degree(v);
    for (VertexId w : g.out_heads(v)) {
        if (!g.is_target(w)) counts[static_cast<size_t>(g.v0_index(w))] += 1;
    }
}

}  // namespace

bool is_stable(const Multigraph& g, const ParticleConfiguration& sigma) {
    for (VertexId v : g.non_targets()) {
        if (sigma.counts[static_cast<size_t>(g.v0_index(v))] >= g.out_degree(v)) {
            return false;
        }
    }
    return true;
}

ParticleConfiguration particles(const StableConfiguration& sigma) {
    return ParticleConfiguration{sigma.counts};
}

long long stable_space_bound(const Multigraph& g) {
    long long product = 1;
    for (VertexId v : g.non_targets()) {
        const long long d = g.out_degree(v);
        if (product > kSaturated / d) return kSaturated;
        product *= d;
    }
    return product;
}

ParticleConfiguration topple(const Multigraph& g, const ParticleConfiguration& sigma,
                             VertexId v) {
    if (g.is_target(v)) {
        throw Error(ErrorCode::TargetVertex,
                    "target '" + g.label(v) + "' cannot topple");
    }
    if (sigma.counts[static_cast<size_t>(g.v0_index(v))] < g.out_degree(v)) {
        throw Error(ErrorCode::NotUnstable,
                    "vertex '" + g.label(v) + "' holds fewer than d(v) particles");
    }
    ParticleConfiguration out = sigma;
    topple_inplace(g, out.counts, v);
    return out;
}

StableConfiguration stabilize(const Multigraph& g, const ParticleConfiguration& sigma) {
    std::vector<long long> counts = sigma.counts;
    // Sweep until a full pass finds nothing unstable. Order cannot change the
    // result, so the cheap schedule is fine.
    bool toppled = true;
    while (toppled) {
        toppled = false;
        for (VertexId v : g.non_targets()) {
            const auto k = static_cast<size_t>(g.v0_index(v));
            while (counts[k] >= g.out_degree(v)) {
                topple_inplace(g, counts, v);
                toppled = true;
            }
        }
    }
    return StableConfiguration{std::move(counts)};
}

StableConfiguration monoid_add(const Multigraph& g, const StableConfiguration& a,
                               const StableConfiguration& b) {
    return stabilize(g, particles(a) + particles(b));
}

GroupElement identity_element(const Multigraph& g) {
    // Recurrent seed: iterate k -> stabilize(k * ones), folding each step as
    // stabilize(previous + ones), until the sequence revisits a value;
    // everything on that cycle recurs after arbitrarily large additions,
    // hence is recurrent.
    const ParticleConfiguration ones = uniform_particles(g, 1);
    std::map<StableConfiguration, long long> seen;
    StableConfiguration s = stabilize(g, ones);
    while (seen.emplace(s, static_cast<long long>(seen.size())).second) {
        s = stabilize(g, particles(s) + ones);
    }
    const StableConfiguration seed = s;

    // Powers of a recurrent element stay in the group and cycle through the
    // subgroup it generates; the unique idempotent among them is e.
    const long long cap = stable_space_bound(g) + 1;
    StableConfiguration power = seed;
    for (long long i = 0; i < cap; ++i) {
        if (monoid_add(g, power, power) == power) return power;
        power = monoid_add(g, power, seed);
    }
    throw Error(ErrorCode::OrbitBudgetExceeded,
                "no idempotent among the first " + std::to_string(cap) +
                    " powers of the recurrent seed");
}

bool is_recurrent(const Multigraph& g, const StableConfiguration& tau,
                  const GroupElement* identity) {
    const GroupElement e = identity ? *identity : identity_element(g);
    return monoid_add(g, tau, e) == tau;
}

GroupElement source_group_element(const Multigraph& g, const GroupElement* identity) {
    const GroupElement e = identity ? *identity : identity_element(g);
    return stabilize(g, particle_at(g, g.source()) + particles(e));
}

long long order_of(const Multigraph& g, const GroupElement& tau,
                   const GroupElement* identity) {
    const GroupElement e = identity ? *identity : identity_element(g);
    const long long cap = stable_space_bound(g) + 1;
    StableConfiguration power = tau;
    for (long long k = 1; k <= cap; ++k) {
        if (power == e) return k;
        power = monoid_add(g, power, tau);
    }
    throw Error(ErrorCode::OrbitBudgetExceeded,
                "powers of the element did not reach the identity within " +
                    std::to_string(cap) + " steps (element not recurrent?)");
}

std::vector<StableConfiguration> enumerate_stable(const Multigraph& g, long long cap) {
    const long long space = stable_space_bound(g);
    if (space > cap) {
        throw Error(ErrorCode::EnumerationTooLarge,
                    std::to_string(space) + " stable configurations exceed the cap of " +
                        std::to_string(cap));
    }
    const int k = g.non_target_count();
    std::vector<StableConfiguration> out;
    out.reserve(static_cast<size_t>(space));
    StableConfiguration sigma{std::vector<long long>(static_cast<size_t>(k), 0)};
    while (true) {
        out.push_back(sigma);
        int pos = k - 1;
        while (pos >= 0) {
            auto& count = sigma.counts[static_cast<size_t>(pos)];
            if (count < g.out_degree(g.v0_vertex(pos)) - 1) {
                ++count;
                break;
            }
            count = 0;
            --pos;
        }
        if (pos < 0) return out;
    }
}

}  // namespace rotor
