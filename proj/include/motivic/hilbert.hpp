#pragma once

// Quadratic Hilbert symbols on Q* and the K_2 shadow of commuting automorphisms.
//
// Values of Z/2 are written additively: 0 is the trivial symbol (+1), 1 the
// nontrivial one (-1).

#include <cstdint>
#include <vector>

#include "motivic/numeric.hpp"

namespace motivic {

/// value = p^alpha * unit, unit a p-adic unit.
struct UnitDecomp {
    Rational value;
    std::uint64_t p = 2;
    long alpha = 0;
    Rational unit;
};

UnitDecomp decompose(const Rational& value, std::uint64_t p);

/// 2-adic Hilbert symbol (a, b)_2.
int hilbert2(const Rational& a, const Rational& b);

/// (a, b)_p for an odd prime p (tame symbol formula).
int hilbert_odd(const Rational& a, const Rational& b, std::uint64_t p);

/// Joint eigenvalue data of two commuting automorphisms (f, g): f acts by
/// lambda and g by mu on a summand of the given signed multiplicity.
struct PairSummand {
    Rational lambda;
    Rational mu;
    long multiplicity = 1;
    friend bool operator==(const PairSummand&, const PairSummand&) = default;
};

struct CommutingPair {
    std::vector<PairSummand> summands;
};

/// Formal product of Steinberg symbols {a, b}^exponent.
struct SteinbergFactor {
    Rational a;
    Rational b;
    long exponent = 1;
    friend bool operator==(const SteinbergFactor&, const SteinbergFactor&) = default;
};

struct SteinbergProduct {
    std::vector<SteinbergFactor> factors;
};

/// (f, g) -> f^-1 * g on joint eigenspaces: one symbol {lambda^-1, mu} per
/// summand. Symbols with an entry equal to 1 are trivial and dropped when
/// `drop_trivial` is set.
SteinbergProduct sigma2(const CommutingPair& pair, bool drop_trivial = true);

/// sum exponent * (a, b)_2 mod 2.
int moore_h2(const SteinbergProduct& s);

/// sum exponent * (a, b)_p mod 2, p odd.
int moore_odd(const SteinbergProduct& s, std::uint64_t p);

}  // namespace motivic
