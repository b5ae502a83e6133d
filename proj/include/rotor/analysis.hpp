#pragma once

#include <string>
#include <vector>

#include "rotor/equivalence.hpp"
#include "rotor/sandpile.hpp"

namespace rotor {

struct HittingReport {
    std::vector<VertexId> prefix;  // t1..t_3D
    long long class_period = 0;    // D
    long long minimal_period = 0;  // smallest divisor p of D that repeats
    std::vector<VertexId> word;    // t1..tD
};

// Smallest D >= 1 with canonical(rho_D) == canonical(rho_0), where rho_n =
// E+_s(rho_{n-1}). The orbit is purely periodic; revisiting any other class
// first would disprove that and raises the same budget error. Pass budget 0
// for the group-size bound. Throws Error(OrbitBudgetExceeded).
long long class_orbit_period(const RotorSystem& sys, const RotorConfiguration& rho0,
                             long long orbit_budget = 0);

// D, the fundamental word t1..tD, and the minimal period p (smallest divisor
// of D whose shift fixes the whole 3D prefix).
HittingReport analyze_hitting(const RotorSystem& sys, const RotorConfiguration& rho0,
                              long long orbit_budget = 0);

struct ReversalReport {
    bool pass = false;
    long long period = 0;                 // D of the forward system
    std::vector<VertexId> word;           // forward fundamental word
    std::vector<VertexId> reversed_word;  // first 2D hits of the reversed system
    std::string detail;                   // first violated index when !pass
};

// Reversed mechanisms, started from the flip of rho0, must hit targets in the
// reversed order: u'_i = u_{D+1-i} for 1 <= i <= D, and u' has period D.
ReversalReport verify_reversal(const RotorSystem& sys, const RotorConfiguration& rho0);

// Every mechanism reads the same backwards (as a head sequence).
bool mechanisms_palindromic(const RotorSystem& sys);
// Every mechanism's periodic extension is made of blocks of m equal heads.
bool mechanisms_m_repetitive(const RotorSystem& sys, int m);

// t_i = t_{D+1-i} over one fundamental word. Throws
// Error(PreconditionNotPalindromic) unless mechanisms_palindromic holds.
bool verify_palindromic(const RotorSystem& sys, const RotorConfiguration& rho0);

// The hitting prefix of length 3*D*m falls into blocks of m equal terms.
// Throws Error(PreconditionNotRepetitive) unless mechanisms are m-repetitive.
bool verify_m_repetitive(const RotorSystem& sys, const RotorConfiguration& rho0, int m);

// u-_1..u-_n from iterating E-_s.
std::vector<VertexId> antiparticle_hitting(const RotorSystem& sys,
                                           const RotorConfiguration& rho0, long long n);

// All slot assignments, in odometer order (last vertex fastest). Throws
// Error(EnumerationTooLarge) when the product of the d(v) exceeds the cap.
std::vector<RotorConfiguration> enumerate_configurations(const RotorSystem& sys,
                                                         long long cap = 100000);
std::vector<RotorConfiguration> enumerate_acyclic(const RotorSystem& sys,
                                                  long long cap = 100000);

struct PermutationReport {
    bool pass = false;
    long long acyclic_count = 0;
    long long class_count = 0;
    std::string detail;
};

// E+_s permutes the acyclic configurations, and the induced map on canonical
// classes is a permutation too; the canonical forms are exactly the acyclic
// configurations. Errors as enumerate_configurations.
PermutationReport permutation_check(const RotorSystem& sys, long long cap = 100000);

}  // namespace rotor
