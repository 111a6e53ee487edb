#pragma once

// Cohomology catalog and the h_2 invariant of (variety, automorphism, Galois) scenarios.
//
// The catalog hard-codes compactly supported l-adic cohomology of cellular
// spaces and tori. Geometric Frobenius acts on H^{2i}_c of a cell by q^i; in
// general an entry of Tate weight w has Frobenius eigenvalue q^w and complex
// conjugation eigenvalue (-1)^w.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/hilbert.hpp"
#include "motivic/numeric.hpp"
#include "motivic/rat.hpp"
#include "motivic/variety.hpp"

namespace motivic {

enum class GaloisKind { Frobenius, Conjugation };

struct Galois {
    GaloisKind kind = GaloisKind::Frobenius;
    std::uint64_t q = 0;  // Frobenius only

    static Galois frobenius(std::uint64_t q) { return {GaloisKind::Frobenius, q}; }
    static Galois conjugation() { return {GaloisKind::Conjugation, 0}; }
};

/// H^degree_c contains `multiplicity` copies of Q_l(-weight).
struct WeightEntry {
    unsigned degree = 0;
    unsigned weight = 0;
    long multiplicity = 1;
    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

struct CohEntry {
    unsigned degree = 0;
    Rational eigenvalue;
    long multiplicity = 1;
    friend bool operator==(const CohEntry&, const CohEntry&) = default;
};

/// Point, A(n), P(n), T(n), products (Kuenneth) and disjoint unions thereof.
/// Throws UnsupportedSpace otherwise. Sorted by (degree, weight).
std::vector<WeightEntry> cohomology_weights(const VarietyExpr& space);

std::vector<CohEntry> cohomology_table(const VarietyExpr& space, const Galois& galois);

/// prod_i det(1 - Frob t | H^i_c)^((-1)^(i+1)), reduced.
RationalFn catalog_zeta(const VarietyExpr& space);

struct LefschetzReport {
    bool passed = true;
    unsigned failed_m = 0;
    BigInt trace;
    BigInt count;
};

/// sum_i (-1)^i Tr(Frob^m | H^i_c) == #X(F_{q^m}) for m <= m_max.
LefschetzReport lefschetz_check(const VarietyExpr& space, unsigned m_max);

/// A disjoint union of catalog components, an automorphism permuting
/// identical components, and a Galois element.
struct Scenario {
    std::vector<VarietyExpr> components;
    std::vector<std::size_t> permutation;  // component i -> permutation[i]
    Galois galois;
};

/// Cycle notation with 1-based components, e.g. "(1 2)(3 4)"; "" or "()" is the identity.
std::vector<std::size_t> parse_cycles(std::string_view text, std::size_t size);

/// Splits a top-level union into components and validates the scenario.
Scenario make_scenario(const VarietyExpr& space, std::vector<std::size_t> permutation, const Galois& galois);

/// Grammar: "<variety>" swap=(1 2) galois=frob q=3   |   ... galois=conj
Scenario parse_scenario(std::string_view text);

/// Disjoint union of two scenarios with the same Galois element.
Scenario combine(const Scenario& a, const Scenario& b);

/// Permutation eigenvalues (+1, and -1 on 2-cycles) against Galois
/// eigenvalues, multiplicities signed by (-1)^degree. Equal (lambda, mu) pairs
/// are aggregated in order of first appearance; zero totals are dropped.
CommutingPair scenario_pairs(const Scenario& s);

/// moore_h2(sigma2(scenario_pairs(s))).
int h2_eval(const Scenario& s);

/// The same pipeline with the odd-prime symbol (., .)_ell. Frobenius scenarios
/// need ell not dividing q.
int h_odd_eval(const Scenario& s, std::uint64_t ell);

}  // namespace motivic
