#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotor/analysis.hpp"
#include "rotor/random_instance.hpp"

namespace rotor {

// One property check on one instance. `detail` names the first violation.
struct CheckOutcome {
    bool pass = true;
    std::string detail;
};

// t_i = t_{i+D} for 1 <= i <= 2D, with D the class-orbit period.
CheckOutcome check_pure_periodicity(const RotorSystem& sys,
                                    const RotorConfiguration& rho0);

// The class-orbit period equals the order of g_s in the sandpile group.
CheckOutcome check_period_equals_order(const RotorSystem& sys,
                                       const RotorConfiguration& rho0);

CheckOutcome check_reversal(const RotorSystem& sys, const RotorConfiguration& rho0);

CheckOutcome check_palindromic(const RotorSystem& sys, const RotorConfiguration& rho0);

CheckOutcome check_repetitive(const RotorSystem& sys, const RotorConfiguration& rho0,
                              int m);

// `orders` random maximal firing schedules from (sigma, rho0) must all yield
// the final rotors and per-target hit counts of the canonical schedule.
CheckOutcome check_abelian(const RotorSystem& sys, const ParticleConfiguration& sigma,
                           const RotorConfiguration& rho0, int orders, Rng& rng);

// Exhaustive per-instance bundle: canonical form = identity action; fixed
// point of the identity action iff acyclic; class, acyclic, and recurrent
// counts agree. Requires the slot product within `cap`.
CheckOutcome check_eqclass(const RotorSystem& sys, long long cap = 10000);

// `trials` randomized cycle-selection schedules terminate in the canonical
// acyclic form that the deterministic selection finds.
CheckOutcome check_push_order_independence(const RotorSystem& sys,
                                           const RotorConfiguration& rho, int trials,
                                           Rng& rng);

// After E+_v: the antiparticle walk retraces the loop-erasure of the particle
// path, E-_v undoes E+_v up to equivalence, and the popping decomposition
// replays to E+_v(rho).
CheckOutcome check_antiparticle_laws(const RotorSystem& sys,
                                     const RotorConfiguration& rho, VertexId v);

// Flip is an involution, conjugates particle addition into antiparticle
// addition, and undoes a cycle push across a double flip.
CheckOutcome check_flip_laws(const RotorSystem& sys, const RotorConfiguration& rho,
                             VertexId v);

enum class SuiteKind { periodic, reversal, palindrome, repetitive, abelian, eqclass };

std::optional<SuiteKind> suite_from_name(std::string_view name);
std::string_view to_string(SuiteKind kind);

struct SuiteResult {
    std::string name;
    int total = 0;
    int passed = 0;
    std::vector<std::string> failures;  // one line per failing instance

    bool ok() const { return passed == total; }
};

// Runs `count` independently seeded random instances of the named suite.
// Instance i uses mix_seed(seed, i), so results do not depend on execution
// order; batches fan out across threads when OpenMP is enabled.
SuiteResult run_suite(SuiteKind kind, int count, uint64_t seed);

}  // namespace rotor
