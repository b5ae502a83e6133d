#pragma once

#include <utility>
#include <vector>

#include "rotor/rotor_system.hpp"

namespace rotor {

// Particle counts on the non-target vertices, by V0 index. Targets absorb:
// a particle that reaches T leaves the configuration.
struct ParticleConfiguration {
    std::vector<long long> counts;

    auto operator<=>(const ParticleConfiguration&) const = default;
};

ParticleConfiguration zero_particles(const Multigraph& g);
// delta_v: one particle at v (v must be a non-target).
ParticleConfiguration particle_at(const Multigraph& g, VertexId v);
// k particles on every non-target vertex.
ParticleConfiguration uniform_particles(const Multigraph& g, long long k);
ParticleConfiguration operator+(const ParticleConfiguration& a,
                                const ParticleConfiguration& b);
long long total(const ParticleConfiguration& sigma);

enum class WalkMode { particle, antiparticle };

// One walk from its start to the first target hit.
struct WalkTrace {
    std::vector<VertexId> path;  // x0..xr with xr the target reached; [v] when v in T
    RotorConfiguration rotors;   // rotor configuration after the walk
    VertexId target;             // == path.back()
};

// Particle: progress the rotor at v, then move along the new retrospective
// arc. Antiparticle: move along the current retrospective arc, then regress.
// Both throw Error(TargetVertex) when v is a target.
std::pair<RotorConfiguration, VertexId> particle_step(const RotorSystem& sys,
                                                      const RotorConfiguration& rho,
                                                      VertexId v);
std::pair<RotorConfiguration, VertexId> antiparticle_step(const RotorSystem& sys,
                                                          const RotorConfiguration& rho,
                                                          VertexId v);

// Defensive cap on a single walk: |V| * (sum of d(v)) * 4. A strongly
// connected instance can never reach it.
long long default_step_budget(const Multigraph& g);

// Iterate steps from `start` until a target is reached. Pass step_budget = 0
// for the default; throws Error(StepBudgetExceeded) past the cap.
WalkTrace walk_to_target(const RotorSystem& sys, const RotorConfiguration& rho,
                         VertexId start, WalkMode mode = WalkMode::particle,
                         long long step_budget = 0);

// E+_v / E-_v: the final rotors of the corresponding walk (identity for v in T).
RotorConfiguration add_particle(const RotorSystem& sys, const RotorConfiguration& rho,
                                VertexId v);
RotorConfiguration add_antiparticle(const RotorSystem& sys,
                                    const RotorConfiguration& rho, VertexId v);

// E_sigma: add_particle sigma(v) times per vertex, in ascending vertex order.
// The result does not depend on that schedule; traces do.
RotorConfiguration act(const RotorSystem& sys, const ParticleConfiguration& sigma,
                       const RotorConfiguration& rho);

// Advance one particle at v by a single rotor step. A particle entering T is
// absorbed; the vertex it moved to is the head of retrospective_arc at v in
// the returned configuration. Throws Error(NoParticle) when counts(v) == 0.
std::pair<ParticleConfiguration, RotorConfiguration> fire(
    const RotorSystem& sys, const ParticleConfiguration& particles,
    const RotorConfiguration& rho, VertexId v);

// t1..tn and rho1..rhon from iterating E+_s.
struct HittingStream {
    std::vector<VertexId> targets;
    std::vector<RotorConfiguration> configs;
};

HittingStream hitting_stream(const RotorSystem& sys, const RotorConfiguration& rho0,
                             long long n, long long step_budget = 0);

}  // namespace rotor
