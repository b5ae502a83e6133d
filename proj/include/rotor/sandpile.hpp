#pragma once

#include "rotor/walk.hpp"

namespace rotor {

// A particle configuration with sigma(v) <= d(v)-1 everywhere. Recurrent
// stable configurations form the sandpile group; recurrence is a property
// (see is_recurrent), not a separate type.
struct StableConfiguration {
    std::vector<long long> counts;  // by V0 index

    auto operator<=>(const StableConfiguration&) const = default;
};

using GroupElement = StableConfiguration;

bool is_stable(const Multigraph& g, const ParticleConfiguration& sigma);
ParticleConfiguration particles(const StableConfiguration& sigma);

// Number of stable configurations, i.e. the product of the d(v). Saturates
// instead of overflowing; serves as the group-size bound for orbit budgets.
long long stable_space_bound(const Multigraph& g);

// Send one grain along each out-arc of v; grains entering T vanish, a
// self-loop arc returns its grain. Throws Error(NotUnstable) when
// sigma(v) < d(v).
ParticleConfiguration topple(const Multigraph& g, const ParticleConfiguration& sigma,
                             VertexId v);

// Repeated toppling until stable. Terminates because every vertex has a path
// into T; the result is independent of the toppling order.
StableConfiguration stabilize(const Multigraph& g, const ParticleConfiguration& sigma);

// (a + b) stabilized: the sandpile monoid operation.
StableConfiguration monoid_add(const Multigraph& g, const StableConfiguration& a,
                               const StableConfiguration& b);

// The unique idempotent recurrent configuration; neutral on every recurrent.
GroupElement identity_element(const Multigraph& g);

// tau is recurrent iff adding the identity and stabilizing returns tau.
// Pass a precomputed identity to skip recomputing it in a loop.
bool is_recurrent(const Multigraph& g, const StableConfiguration& tau,
                  const GroupElement* identity = nullptr);

// g_s = (delta_s + e) stabilized: the group element one source particle adds.
GroupElement source_group_element(const Multigraph& g,
                                  const GroupElement* identity = nullptr);

// Smallest k >= 1 with the k-fold monoid power of tau equal to the identity.
// tau must be recurrent.
long long order_of(const Multigraph& g, const GroupElement& tau,
                   const GroupElement* identity = nullptr);

// Every stable configuration, in odometer order (last vertex fastest).
// Throws Error(EnumerationTooLarge) when their number exceeds the cap.
std::vector<StableConfiguration> enumerate_stable(const Multigraph& g,
                                                  long long cap = 100000);

}  // namespace rotor
