#include "rotor/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rotor {

long long class_orbit_period(const RotorSystem& sys, const RotorConfiguration& rho0,
                             long long orbit_budget) {
    const Multigraph& g = sys.graph();
    const long long cap = orbit_budget > 0 ? orbit_budget : stable_space_bound(g);
    const RotorConfiguration canon0 = complete_cycle_pushing(sys, rho0);
    std::map<RotorConfiguration, long long> seen;
    RotorConfiguration rho = rho0;
    for (long long n = 1; n <= cap; ++n) {
        rho = add_particle(sys, rho, g.source());
        RotorConfiguration canon = complete_cycle_pushing(sys, rho);
        if (canon == canon0) return n;
        if (!seen.emplace(std::move(canon), n).second) {
            throw Error(ErrorCode::OrbitBudgetExceeded,
                        "class orbit revisited a class other than the start at step " +
                            std::to_string(n) + "; the orbit should be purely periodic");
        }
    }
    throw Error(ErrorCode::OrbitBudgetExceeded,
                "class orbit did not return within " + std::to_string(cap) + " steps");
}

namespace {

std::vector<long long> divisors_ascending(long long n) {
    std::vector<long long> low, high;
    for (long long p = 1; p * p <= n; ++p) {
        if (n % p != 0) continue;
        low.push_back(p);
        if (p != n / p) high.push_back(n / p);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

}  // namespace

HittingReport analyze_hitting(const RotorSystem& sys, const RotorConfiguration& rho0,
                              long long orbit_budget) {
    HittingReport report;
    report.class_period = class_orbit_period(sys, rho0, orbit_budget);
    const long long D = report.class_period;
    report.prefix = hitting_stream(sys, rho0, 3 * D).targets;
    report.word.assign(report.prefix.begin(), report.prefix.begin() + D);
    for (long long p : divisors_ascending(D)) {
        bool repeats = true;
        for (size_t i = 0; i + static_cast<size_t>(p) < report.prefix.size(); ++i) {
            if (report.prefix[i] != report.prefix[i + static_cast<size_t>(p)]) {
                repeats = false;
                break;
            }
        }
        if (repeats) {
            report.minimal_period = p;
            break;
        }
    }
    return report;
}

ReversalReport verify_reversal(const RotorSystem& sys, const RotorConfiguration& rho0) {
    ReversalReport report;
    report.period = class_orbit_period(sys, rho0);
    const long long D = report.period;
    report.word = hitting_stream(sys, rho0, D).targets;

    FlippedSystem flipped = flip(sys, rho0);
    report.reversed_word =
        hitting_stream(flipped.system, flipped.config, 2 * D).targets;

    report.pass = true;
    for (long long i = 1; i <= D && report.pass; ++i) {
        const VertexId got = report.reversed_word[static_cast<size_t>(i - 1)];
        const VertexId want = report.word[static_cast<size_t>(D - i)];
        if (got != want) {
            report.pass = false;
            report.detail = "reversed hit " + std::to_string(i) + " is '" +
                            sys.graph().label(got) + "', expected '" +
                            sys.graph().label(want) + "'";
        }
    }
    for (long long i = 1; i <= D && report.pass; ++i) {
        if (report.reversed_word[static_cast<size_t>(i - 1)] !=
            report.reversed_word[static_cast<size_t>(i + D - 1)]) {
            report.pass = false;
            report.detail =
                "reversed stream is not D-periodic at index " + std::to_string(i);
        }
    }
    return report;
}

bool mechanisms_palindromic(const RotorSystem& sys) {
    for (VertexId v : sys.graph().non_targets()) {
        const auto& mech = sys.mechanism(v);
        if (!std::equal(mech.begin(), mech.end(), mech.rbegin())) return false;
    }
    return true;
}

bool mechanisms_m_repetitive(const RotorSystem& sys, int m) {
    if (m < 1) return false;
    for (VertexId v : sys.graph().non_targets()) {
        const auto& mech = sys.mechanism(v);
        const long long d = static_cast<long long>(mech.size());
        // Check one full tiling period of the infinite extension.
        const long long span = std::lcm(d, static_cast<long long>(m));
        for (long long block = 0; block < span; block += m) {
            const VertexId head = mech[static_cast<size_t>(block % d)];
            for (long long j = 1; j < m; ++j) {
                if (mech[static_cast<size_t>((block + j) % d)] != head) return false;
            }
        }
    }
    return true;
}

bool verify_palindromic(const RotorSystem& sys, const RotorConfiguration& rho0) {
    if (!mechanisms_palindromic(sys)) {
        throw Error(ErrorCode::PreconditionNotPalindromic,
                    "a mechanism does not read the same backwards");
    }
    const long long D = class_orbit_period(sys, rho0);
    const auto word = hitting_stream(sys, rho0, D).targets;
    for (long long i = 1; i <= D; ++i) {
        if (word[static_cast<size_t>(i - 1)] != word[static_cast<size_t>(D - i)]) {
            return false;
        }
    }
    return true;
}

bool verify_m_repetitive(const RotorSystem& sys, const RotorConfiguration& rho0,
                         int m) {
    if (!mechanisms_m_repetitive(sys, m)) {
        throw Error(ErrorCode::PreconditionNotRepetitive,
                    "a mechanism is not made of blocks of " + std::to_string(m) +
                        " equal heads");
    }
    const long long D = class_orbit_period(sys, rho0);
    const auto prefix = hitting_stream(sys, rho0, 3 * D * m).targets;
    for (size_t block = 0; block + static_cast<size_t>(m) <= prefix.size();
         block += static_cast<size_t>(m)) {
        for (size_t j = 1; j < static_cast<size_t>(m); ++j) {
            if (prefix[block + j] != prefix[block]) return false;
        }
    }
    return true;
}

std::vector<VertexId> antiparticle_hitting(const RotorSystem& sys,
                                           const RotorConfiguration& rho0,
                                           long long n) {
    std::vector<VertexId> hits;
    hits.reserve(static_cast<size_t>(n));
    RotorConfiguration rho = rho0;
    const VertexId s = sys.graph().source();
    for (long long i = 0; i < n; ++i) {
        WalkTrace trace = walk_to_target(sys, rho, s, WalkMode::antiparticle);
        rho = trace.rotors;
        hits.push_back(trace.target);
    }
    return hits;
}

std::vector<RotorConfiguration> enumerate_configurations(const RotorSystem& sys,
                                                         long long cap) {
    const Multigraph& g = sys.graph();
    const long long space = stable_space_bound(g);
    if (space > cap) {
        throw Error(ErrorCode::EnumerationTooLarge,
                    std::to_string(space) + " configurations exceed the cap of " +
                        std::to_string(cap));
    }
    const int k = g.non_target_count();
    std::vector<RotorConfiguration> out;
    out.reserve(static_cast<size_t>(space));
    RotorConfiguration rho{std::vector<int>(static_cast<size_t>(k), 1)};
    while (true) {
        out.push_back(rho);
        int pos = k - 1;
        while (pos >= 0) {
            auto& slot = rho.slots[static_cast<size_t>(pos)];
            if (slot < g.out_degree(g.v0_vertex(pos))) {
                ++slot;
                break;
            }
            slot = 1;
            --pos;
        }
        if (pos < 0) return out;
    }
}

std::vector<RotorConfiguration> enumerate_acyclic(const RotorSystem& sys,
                                                  long long cap) {
    std::vector<RotorConfiguration> out;
    for (auto& rho : enumerate_configurations(sys, cap)) {
        if (is_acyclic(sys, rho)) out.push_back(std::move(rho));
    }
    return out;
}

PermutationReport permutation_check(const RotorSystem& sys, long long cap) {
    const Multigraph& g = sys.graph();
    PermutationReport report;
    report.pass = true;

    const auto all = enumerate_configurations(sys, cap);
    std::set<RotorConfiguration> acyclic;
    for (const auto& rho : all) {
        if (is_acyclic(sys, rho)) acyclic.insert(rho);
    }
    report.acyclic_count = static_cast<long long>(acyclic.size());

    std::set<RotorConfiguration> image;
    for (const auto& rho : acyclic) {
        RotorConfiguration next = add_particle(sys, rho, g.source());
        if (!acyclic.count(next)) {
            report.pass = false;
            report.detail = "a particle addition left the acyclic set";
            break;
        }
        if (!image.insert(std::move(next)).second) {
            report.pass = false;
            report.detail = "two acyclic configurations collide under particle addition";
            break;
        }
    }

    std::set<RotorConfiguration> canonicals;
    for (const auto& rho : all) canonicals.insert(complete_cycle_pushing(sys, rho));
    report.class_count = static_cast<long long>(canonicals.size());
    if (report.pass && canonicals != acyclic) {
        report.pass = false;
        report.detail = "canonical forms differ from the acyclic configurations";
    }
    if (report.pass) {
        std::set<RotorConfiguration> class_image;
        for (const auto& c : canonicals) {
            class_image.insert(complete_cycle_pushing(sys, add_particle(sys, c, g.source())));
        }
        if (class_image.size() != canonicals.size()) {
            report.pass = false;
            report.detail = "particle addition is not injective on classes";
        }
    }
    return report;
}

}  // namespace rotor
