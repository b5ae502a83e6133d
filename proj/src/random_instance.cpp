#include "rotor/random_instance.hpp"

#include <algorithm>
#include <string>

#include "rotor/sandpile.hpp"

namespace rotor {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

std::vector<VertexId> pick_mechanism(const InstanceOptions& options, int n, Rng& rng) {
    std::vector<VertexId> heads;
    if (options.repetitive_m > 0) {
        const int m = options.repetitive_m;
        const int max_blocks = std::max(1, options.max_out_degree / m);
        const long long blocks = rng.range(1, max_blocks);
        for (long long b = 0; b < blocks; ++b) {
            const auto head = static_cast<VertexId>(rng.range(0, n - 1));
            heads.insert(heads.end(), static_cast<size_t>(m), head);
        }
        return heads;
    }
    const long long d = rng.range(1, options.max_out_degree);
    heads.resize(static_cast<size_t>(d));
    if (options.palindromic) {
        for (long long i = 0; i * 2 < d; ++i) {
            const auto head = static_cast<VertexId>(rng.range(0, n - 1));
            heads[static_cast<size_t>(i)] = head;
            heads[static_cast<size_t>(d - 1 - i)] = head;
        }
        if (d % 2 == 1) {
            heads[static_cast<size_t>(d / 2)] = static_cast<VertexId>(rng.range(0, n - 1));
        }
    } else {
        for (auto& head : heads) head = static_cast<VertexId>(rng.range(0, n - 1));
    }
    return heads;
}

}  // namespace

RandomInstance random_instance(const InstanceOptions& options, Rng& rng) {
    constexpr int kMaxAttempts = 100000;
    const int min_vertices = std::max(2, options.min_vertices);  // need a source and a target
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const int n = static_cast<int>(rng.range(min_vertices, options.max_vertices));
        GraphSpec spec;
        spec.vertices.reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) spec.vertices.push_back(std::to_string(v + 1));

        // Random nonempty proper subset of vertices as targets.
        std::vector<int> ids(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) ids[static_cast<size_t>(v)] = v;
        for (int v = n - 1; v > 0; --v) {
            std::swap(ids[static_cast<size_t>(v)],
                      ids[static_cast<size_t>(rng.range(0, v))]);
        }
        const int num_targets = static_cast<int>(rng.range(1, n - 1));
        std::vector<bool> is_target(static_cast<size_t>(n), false);
        for (int i = 0; i < num_targets; ++i) {
            is_target[static_cast<size_t>(ids[static_cast<size_t>(i)])] = true;
            spec.targets.push_back(spec.vertices[static_cast<size_t>(ids[static_cast<size_t>(i)])]);
        }
        std::sort(spec.targets.begin(), spec.targets.end());

        std::vector<int> non_targets;
        for (int v = 0; v < n; ++v) {
            if (!is_target[static_cast<size_t>(v)]) non_targets.push_back(v);
        }
        spec.source = spec.vertices[static_cast<size_t>(
            non_targets[static_cast<size_t>(rng.range(
                0, static_cast<long long>(non_targets.size()) - 1))])];

        for (int v : non_targets) {
            std::vector<std::string> labels;
            for (VertexId head : pick_mechanism(options, n, rng)) {
                labels.push_back(spec.vertices[static_cast<size_t>(head)]);
            }
            spec.rotors.emplace_back(spec.vertices[static_cast<size_t>(v)],
                                     std::move(labels));
        }

        Multigraph g = Multigraph::build_unchecked(spec);
        if (!is_strongly_connected(g)) continue;
        if (options.max_config_space > 0 &&
            stable_space_bound(g) > options.max_config_space) {
            continue;
        }
        auto shared = std::make_shared<const Multigraph>(std::move(g));
        RotorSystem sys(shared);
        RotorConfiguration rho = random_configuration(sys, rng);
        return RandomInstance{std::move(sys), std::move(rho)};
    }
    throw Error(ErrorCode::ValidationError,
                "random instance generation exhausted its attempt cap");
}

RotorConfiguration random_configuration(const RotorSystem& sys, Rng& rng) {
    const Multigraph& g = sys.graph();
    RotorConfiguration rho{std::vector<int>(static_cast<size_t>(g.non_target_count()))};
    for (int k = 0; k < g.non_target_count(); ++k) {
        rho.slots[static_cast<size_t>(k)] =
            static_cast<int>(rng.range(1, g.out_degree(g.v0_vertex(k))));
    }
    return rho;
}

ParticleConfiguration random_particles(const Multigraph& g, long long total, Rng& rng) {
    ParticleConfiguration sigma = zero_particles(g);
    for (long long i = 0; i < total; ++i) {
        const auto k = static_cast<size_t>(
            rng.range(0, static_cast<long long>(g.non_target_count()) - 1));
        sigma.counts[k] += 1;
    }
    return sigma;
}

}  // namespace rotor
