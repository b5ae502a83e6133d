#include "rotor/walk.hpp"

namespace rotor {

namespace {

void require_non_target(const Multigraph& g, VertexId v) {
    if (g.is_target(v)) {
        throw Error(ErrorCode::TargetVertex,
                    "vertex '" + g.label(v) + "' is a target and has no rotor");
    }
}

// In-place single steps; the walk loop avoids a configuration copy per move.
VertexId step_particle_inplace(const RotorSystem& sys, RotorConfiguration& rho,
                               VertexId v) {
    const Multigraph& g = sys.graph();
    const auto k = static_cast<size_t>(g.v0_index(v));
    rho.slots[k] = rho.slots[k] % g.out_degree(v) + 1;
    return sys.mechanism_head(v, rho.slots[k]);
}

VertexId step_antiparticle_inplace(const RotorSystem& sys, RotorConfiguration& rho,
                                   VertexId v) {
    const Multigraph& g = sys.graph();
    const auto k = static_cast<size_t>(g.v0_index(v));
    const int d = g.out_degree(v);
    const VertexId next = sys.mechanism_head(v, rho.slots[k]);
    rho.slots[k] = (rho.slots[k] + d - 2) % d + 1;
    return next;
}

}  // namespace

ParticleConfiguration zero_particles(const Multigraph& g) {
    return ParticleConfiguration{
        std::vector<long long>(static_cast<size_t>(g.non_target_count()), 0)};
}

ParticleConfiguration particle_at(const Multigraph& g, VertexId v) {
    require_non_target(g, v);
    auto sigma = zero_particles(g);
    sigma.counts[static_cast<size_t>(g.v0_index(v))] = 1;
    return sigma;
}

ParticleConfiguration uniform_particles(const Multigraph& g, long long k) {
    return ParticleConfiguration{
        std::vector<long long>(static_cast<size_t>(g.non_target_count()), k)};
}

ParticleConfiguration operator+(const ParticleConfiguration& a,
                                const ParticleConfiguration& b) {
    ParticleConfiguration out = a;
    for (size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
    return out;
}

long long total(const ParticleConfiguration& sigma) {
    long long sum = 0;
    for (long long c : sigma.counts) sum += c;
    return sum;
}

std::pair<RotorConfiguration, VertexId> particle_step(const RotorSystem& sys,
                                                      const RotorConfiguration& rho,
                                                      VertexId v) {
    require_non_target(sys.graph(), v);
    RotorConfiguration out = rho;
    const VertexId next = step_particle_inplace(sys, out, v);
    return {std::move(out), next};
}

std::pair<RotorConfiguration, VertexId> antiparticle_step(const RotorSystem& sys,
                                                          const RotorConfiguration& rho,
                                                          VertexId v) {
    require_non_target(sys.graph(), v);
    RotorConfiguration out = rho;
    const VertexId next = step_antiparticle_inplace(sys, out, v);
    return {std::move(out), next};
}

long long default_step_budget(const Multigraph& g) {
    return static_cast<long long>(g.vertex_count()) * g.total_out_degree() * 4;
}

WalkTrace walk_to_target(const RotorSystem& sys, const RotorConfiguration& rho,
                         VertexId start, WalkMode mode, long long step_budget) {
    const Multigraph& g = sys.graph();
    const long long cap = step_budget > 0 ? step_budget : default_step_budget(g);
    WalkTrace trace{{start}, rho, start};
    VertexId x = start;
    long long steps = 0;
    while (!g.is_target(x)) {
        if (++steps > cap) {
            throw Error(ErrorCode::StepBudgetExceeded,
                        "walk from '" + g.label(start) + "' exceeded " +
                            std::to_string(cap) + " steps");
        }
        x = (mode == WalkMode::particle)
                ? step_particle_inplace(sys, trace.rotors, x)
                : step_antiparticle_inplace(sys, trace.rotors, x);
        trace.path.push_back(x);
    }
    trace.target = x;
    return trace;
}

RotorConfiguration add_particle(const RotorSystem& sys, const RotorConfiguration& rho,
                                VertexId v) {
    return walk_to_target(sys, rho, v, WalkMode::particle).rotors;
}

RotorConfiguration add_antiparticle(const RotorSystem& sys,
                                    const RotorConfiguration& rho, VertexId v) {
    return walk_to_target(sys, rho, v, WalkMode::antiparticle).rotors;
}

RotorConfiguration act(const RotorSystem& sys, const ParticleConfiguration& sigma,
                       const RotorConfiguration& rho) {
    const Multigraph& g = sys.graph();
    RotorConfiguration out = rho;
    for (VertexId v : g.non_targets()) {
        const long long n = sigma.counts[static_cast<size_t>(g.v0_index(v))];
        for (long long i = 0; i < n; ++i) out = add_particle(sys, out, v);
    }
    return out;
}

std::pair<ParticleConfiguration, RotorConfiguration> fire(
    const RotorSystem& sys, const ParticleConfiguration& particles,
    const RotorConfiguration& rho, VertexId v) {
    const Multigraph& g = sys.graph();
    require_non_target(g, v);
    const auto k = static_cast<size_t>(g.v0_index(v));
    if (particles.counts[k] < 1) {
        throw Error(ErrorCode::NoParticle, "no particle at '" + g.label(v) + "'");
    }
    auto [next_rho, dest] = particle_step(sys, rho, v);
    ParticleConfiguration moved = particles;
    moved.counts[k] -= 1;
    if (!g.is_target(dest)) {
        moved.counts[static_cast<size_t>(g.v0_index(dest))] += 1;
    }
    return {std::move(moved), std::move(next_rho)};
}

HittingStream hitting_stream(const RotorSystem& sys, const RotorConfiguration& rho0,
                             long long n, long long step_budget) {
    HittingStream stream;
    stream.targets.reserve(static_cast<size_t>(n));
    stream.configs.reserve(static_cast<size_t>(n));
    RotorConfiguration rho = rho0;
    const VertexId s = sys.graph().source();
    for (long long i = 0; i < n; ++i) {
        WalkTrace trace = walk_to_target(sys, rho, s, WalkMode::particle, step_budget);
        rho = trace.rotors;
        stream.targets.push_back(trace.target);
        stream.configs.push_back(rho);
    }
    return stream;
}

}  // namespace rotor
