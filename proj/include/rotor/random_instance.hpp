#pragma once

#include <cstdint>
#include <random>

#include "rotor/rotor_system.hpp"
#include "rotor/walk.hpp"

namespace rotor {

// Deterministic across platforms: mt19937_64's output sequence is pinned by
// the standard, and draws reduce by modulo rather than going through the
// implementation-defined distribution adaptors.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t below(uint64_t bound) { return engine_() % bound; }  // [0, bound)

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool chance(uint64_t numerator, uint64_t denominator) {
        return below(denominator) < numerator;
    }

private:
    std::mt19937_64 engine_;
};

// Independent per-index stream off one master seed (splitmix64 finalizer), so
// batch items can run in any order or in parallel without sharing an engine.
uint64_t mix_seed(uint64_t seed, uint64_t index);

struct InstanceOptions {
    int min_vertices = 2;
    int max_vertices = 7;
    int max_out_degree = 4;
    bool palindromic = false;        // mirror every mechanism head sequence
    int repetitive_m = 0;            // > 0: mechanisms in blocks of m equal heads
    long long max_config_space = 0;  // > 0: reject when the slot product exceeds it
};

struct RandomInstance {
    RotorSystem system;
    RotorConfiguration rotors;  // uniformly random slots
};

// Rejection-sampled strongly connected instance. Deterministic for a given
// Rng state; throws Error(ValidationError) if no candidate passes within a
// generous attempt cap (not reachable for the option ranges used here).
RandomInstance random_instance(const InstanceOptions& options, Rng& rng);

RotorConfiguration random_configuration(const RotorSystem& sys, Rng& rng);

// `total` particles dropped one by one on uniform non-target vertices.
ParticleConfiguration random_particles(const Multigraph& g, long long total, Rng& rng);

}  // namespace rotor
