#include "rotor/verify_suites.hpp"

#include <map>
#include <set>
#include <sstream>

namespace rotor {

namespace {

std::string label_word(const Multigraph& g, const std::vector<VertexId>& word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += ',';
        out += g.label(word[i]);
    }
    return out;
}

}  // namespace

CheckOutcome check_pure_periodicity(const RotorSystem& sys,
                                    const RotorConfiguration& rho0) {
    const long long D = class_orbit_period(sys, rho0);
    const auto hits = hitting_stream(sys, rho0, 3 * D).targets;
    for (long long i = 1; i <= 2 * D; ++i) {
        if (hits[static_cast<size_t>(i - 1)] != hits[static_cast<size_t>(i + D - 1)]) {
            return {false, "t_" + std::to_string(i) + " != t_" + std::to_string(i + D) +
                               " with D=" + std::to_string(D)};
        }
    }
    return {};
}

CheckOutcome check_period_equals_order(const RotorSystem& sys,
                                       const RotorConfiguration& rho0) {
    const Multigraph& g = sys.graph();
    const long long D = class_orbit_period(sys, rho0);
    const GroupElement e = identity_element(g);
    const long long order = order_of(g, source_group_element(g, &e), &e);
    if (D != order) {
        return {false, "class-orbit period " + std::to_string(D) +
                           " != order of g_s " + std::to_string(order)};
    }
    return {};
}

CheckOutcome check_reversal(const RotorSystem& sys, const RotorConfiguration& rho0) {
    const ReversalReport report = verify_reversal(sys, rho0);
    if (!report.pass) return {false, report.detail};
    return {};
}

CheckOutcome check_palindromic(const RotorSystem& sys,
                               const RotorConfiguration& rho0) {
    if (!verify_palindromic(sys, rho0)) {
        return {false, "hitting word is not a palindrome"};
    }
    return {};
}

CheckOutcome check_repetitive(const RotorSystem& sys, const RotorConfiguration& rho0,
                              int m) {
    if (!verify_m_repetitive(sys, rho0, m)) {
        return {false, "hitting prefix is not " + std::to_string(m) + "-repetitive"};
    }
    return {};
}

namespace {

struct FiringTotals {
    RotorConfiguration rotors;
    std::map<VertexId, long long> hits;

    bool operator==(const FiringTotals&) const = default;
};

// Run (sigma, rho) to exhaustion, choosing the vertex to fire by `pick`,
// which receives the non-target vertices currently holding particles.
template <typename Pick>
FiringTotals run_firings(const RotorSystem& sys, ParticleConfiguration sigma,
                         RotorConfiguration rho, Pick pick) {
    const Multigraph& g = sys.graph();
    FiringTotals totals{std::move(rho), {}};
    for (VertexId t : g.targets()) totals.hits[t] = 0;
    while (true) {
        std::vector<VertexId> occupied;
        for (VertexId v : g.non_targets()) {
            if (sigma.counts[static_cast<size_t>(g.v0_index(v))] > 0) {
                occupied.push_back(v);
            }
        }
        if (occupied.empty()) return totals;
        const VertexId v = pick(occupied);
        auto [next_sigma, next_rho] = fire(sys, sigma, totals.rotors, v);
        const VertexId dest = retrospective_arc(sys, next_rho, v).head;
        if (g.is_target(dest)) totals.hits[dest] += 1;
        sigma = std::move(next_sigma);
        totals.rotors = std::move(next_rho);
    }
}

}  // namespace

CheckOutcome check_abelian(const RotorSystem& sys, const ParticleConfiguration& sigma,
                           const RotorConfiguration& rho0, int orders, Rng& rng) {
    const FiringTotals reference = run_firings(
        sys, sigma, rho0, [](const std::vector<VertexId>& occupied) {
            return occupied.front();  // always the lowest occupied vertex
        });
    for (int trial = 0; trial < orders; ++trial) {
        const FiringTotals got = run_firings(
            sys, sigma, rho0, [&rng](const std::vector<VertexId>& occupied) {
                return occupied[static_cast<size_t>(rng.below(occupied.size()))];
            });
        if (!(got == reference)) {
            return {false, "firing order " + std::to_string(trial + 1) +
                               " changed the outcome"};
        }
    }
    return {};
}

CheckOutcome check_eqclass(const RotorSystem& sys, long long cap) {
    const Multigraph& g = sys.graph();
    const auto all = enumerate_configurations(sys, cap);
    const GroupElement e = identity_element(g);
    const ParticleConfiguration sigma_e = particles(e);

    std::set<RotorConfiguration> canonicals;
    long long acyclic_count = 0;
    for (const auto& rho : all) {
        const RotorConfiguration canon = complete_cycle_pushing(sys, rho);
        const RotorConfiguration e_rho = act(sys, sigma_e, rho);
        if (canon != e_rho) {
            return {false, "cycle pushing and the identity action disagree"};
        }
        const bool acyclic = is_acyclic(sys, rho);
        if (acyclic != (e_rho == rho)) {
            return {false, "acyclicity differs from being fixed by the identity"};
        }
        if (acyclic) ++acyclic_count;
        canonicals.insert(canon);
    }

    long long recurrent_count = 0;
    for (const auto& tau : enumerate_stable(g, cap)) {
        if (is_recurrent(g, tau, &e)) ++recurrent_count;
    }

    if (static_cast<long long>(canonicals.size()) != acyclic_count ||
        acyclic_count != recurrent_count) {
        return {false, "counts disagree: classes " + std::to_string(canonicals.size()) +
                           ", acyclic " + std::to_string(acyclic_count) +
                           ", recurrent " + std::to_string(recurrent_count)};
    }
    return {};
}

namespace {

// Cycle pushing with a randomized selection: pick any cycle of the current
// configuration, not necessarily the deterministic lowest-id one. Cycles are
// disjoint, so collecting them all and choosing one at random explores
// genuinely different schedules.
RotorConfiguration randomized_pushing(const RotorSystem& sys, RotorConfiguration rho,
                                      Rng& rng, long long cap) {
    const Multigraph& g = sys.graph();
    long long pushed = 0;
    while (true) {
        // find_cycle always reports the lowest-id cycle, so gather every
        // cycle of the functional graph here and draw one at random.
        std::vector<RotorCycle> cycles;
        std::vector<int> seen(static_cast<size_t>(g.vertex_count()), 0);
        for (VertexId start = 0; start < g.vertex_count(); ++start) {
            if (seen[static_cast<size_t>(start)] != 0 || g.is_target(start)) continue;
            std::vector<VertexId> chain;
            VertexId v = start;
            while (!g.is_target(v) && seen[static_cast<size_t>(v)] == 0) {
                seen[static_cast<size_t>(v)] = 1;
                chain.push_back(v);
                v = retrospective_arc(sys, rho, v).head;
            }
            if (!g.is_target(v) && seen[static_cast<size_t>(v)] == 1) {
                auto at = std::find(chain.begin(), chain.end(), v);
                cycles.push_back(RotorCycle{std::vector<VertexId>(at, chain.end())});
            }
            for (VertexId u : chain) seen[static_cast<size_t>(u)] = 2;
        }
        if (cycles.empty()) return rho;
        const auto& cycle = cycles[static_cast<size_t>(rng.below(cycles.size()))];
        pushed += static_cast<long long>(cycle.vertices.size());
        if (pushed > cap) {
            throw Error(ErrorCode::PushBudgetExceeded,
                        "randomized pushing exceeded " + std::to_string(cap));
        }
        rho = push_cycle(sys, rho, cycle);
    }
}

}  // namespace

CheckOutcome check_push_order_independence(const RotorSystem& sys,
                                           const RotorConfiguration& rho, int trials,
                                           Rng& rng) {
    const RotorConfiguration canon = complete_cycle_pushing(sys, rho);
    const long long cap = default_push_budget(sys.graph());
    for (int trial = 0; trial < trials; ++trial) {
        if (randomized_pushing(sys, rho, rng, cap) != canon) {
            return {false, "randomized cycle selection " + std::to_string(trial + 1) +
                               " reached a different acyclic form"};
        }
    }
    return {};
}

CheckOutcome check_antiparticle_laws(const RotorSystem& sys,
                                     const RotorConfiguration& rho, VertexId v) {
    const Multigraph& g = sys.graph();
    const WalkTrace forward = walk_to_target(sys, rho, v);
    const LoopErasure erased = loop_erasure(forward.path);

    const WalkTrace backward =
        walk_to_target(sys, forward.rotors, v, WalkMode::antiparticle);
    if (backward.path != erased.simple_path) {
        return {false, "antiparticle path " + label_word(g, backward.path) +
                           " != loop-erasure " + label_word(g, erased.simple_path)};
    }
    if (!equivalent(sys, backward.rotors, rho)) {
        return {false, "E-_v E+_v rho is not equivalent to rho"};
    }

    const PoppingScript script = popping_decomposition(sys, rho, v);
    if (replay_popping(sys, rho, script) != forward.rotors) {
        return {false, "popping replay does not reproduce E+_v rho"};
    }
    return {};
}

CheckOutcome check_flip_laws(const RotorSystem& sys, const RotorConfiguration& rho,
                             VertexId v) {
    const FlippedSystem flipped = flip(sys, rho);
    const FlippedSystem twice = flip(flipped.system, flipped.config);
    if (!(twice.system == sys) || twice.config != rho) {
        return {false, "double flip does not restore the system"};
    }

    const FlippedSystem lhs = flip(sys, add_particle(sys, rho, v));
    const RotorConfiguration rhs = add_antiparticle(flipped.system, flipped.config, v);
    if (lhs.config != rhs) {
        return {false, "flip of E+_v differs from E-_v of the flip"};
    }

    if (auto cycle = find_cycle(sys, rho)) {
        const FlippedSystem inner = flip(sys, push_cycle(sys, rho, *cycle));
        const RotorConfiguration pushed_again =
            push_cycle(inner.system, inner.config, *cycle);
        const FlippedSystem back = flip(inner.system, pushed_again);
        if (!(back.system == sys) || back.config != rho) {
            return {false, "flip-push-flip-push did not restore the configuration"};
        }
    }
    return {};
}

std::optional<SuiteKind> suite_from_name(std::string_view name) {
    if (name == "periodic") return SuiteKind::periodic;
    if (name == "reversal") return SuiteKind::reversal;
    if (name == "palindrome") return SuiteKind::palindrome;
    if (name == "repetitive") return SuiteKind::repetitive;
    if (name == "abelian") return SuiteKind::abelian;
    if (name == "eqclass") return SuiteKind::eqclass;
    return std::nullopt;
}

std::string_view to_string(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::periodic: return "periodic";
        case SuiteKind::reversal: return "reversal";
        case SuiteKind::palindrome: return "palindrome";
        case SuiteKind::repetitive: return "repetitive";
        case SuiteKind::abelian: return "abelian";
        case SuiteKind::eqclass: return "eqclass";
    }
    return "unknown";
}

namespace {

CheckOutcome run_one(SuiteKind kind, uint64_t instance_seed) {
    Rng rng(instance_seed);
    InstanceOptions options;
    switch (kind) {
        case SuiteKind::palindrome:
            options.palindromic = true;
            break;
        case SuiteKind::repetitive:
            options.repetitive_m = rng.chance(1, 2) ? 2 : 3;
            break;
        case SuiteKind::eqclass:
            options.max_vertices = 6;
            options.max_config_space = 10000;
            break;
        default:
            break;
    }
    RandomInstance instance = random_instance(options, rng);
    const RotorSystem& sys = instance.system;
    switch (kind) {
        case SuiteKind::periodic: {
            CheckOutcome outcome = check_pure_periodicity(sys, instance.rotors);
            if (!outcome.pass) return outcome;
            return check_period_equals_order(sys, instance.rotors);
        }
        case SuiteKind::reversal:
            return check_reversal(sys, instance.rotors);
        case SuiteKind::palindrome:
            // The hitting-word symmetries only hold for walks started with
            // every pointer at position 0, so the default configuration
            // replaces the random one here.
            return check_palindromic(sys, initial_configuration(sys));
        case SuiteKind::repetitive:
            return check_repetitive(sys, initial_configuration(sys),
                                    options.repetitive_m);
        case SuiteKind::abelian: {
            const ParticleConfiguration sigma =
                random_particles(sys.graph(), rng.range(1, 10), rng);
            return check_abelian(sys, sigma, instance.rotors, 10, rng);
        }
        case SuiteKind::eqclass:
            return check_eqclass(sys);
    }
    return {false, "unhandled suite"};
}

}  // namespace

SuiteResult run_suite(SuiteKind kind, int count, uint64_t seed) {
    std::vector<CheckOutcome> outcomes(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            outcomes[static_cast<size_t>(i)] = run_one(kind, mix_seed(seed, static_cast<uint64_t>(i)));
        } catch (const std::exception& ex) {
            outcomes[static_cast<size_t>(i)] = {false, std::string("exception: ") + ex.what()};
        }
    }
    SuiteResult result;
    result.name = std::string(to_string(kind));
    result.total = count;
    for (int i = 0; i < count; ++i) {
        const auto& outcome = outcomes[static_cast<size_t>(i)];
        if (outcome.pass) {
            ++result.passed;
        } else {
            std::ostringstream line;
            line << "instance " << i << " (seed " << mix_seed(seed, static_cast<uint64_t>(i))
                 << "): " << outcome.detail;
            result.failures.push_back(line.str());
        }
    }
    return result;
}

}  // namespace rotor
