#pragma once

// Independent check of the 2-adic Hilbert symbol: decide whether
// a x^2 + b y^2 = z^2 has a primitive solution modulo 2^8.

#include "motivic/numeric.hpp"

namespace motivic::oracle {

/// 0 if a x^2 + b y^2 - z^2 has a primitive zero mod 2^8, else 1. Square
/// factors are removed first so both 2-adic valuations are at most 1, which
/// makes mod 2^8 solvability equivalent to 2-adic solvability.
int hilbert2_mod256(const Rational& a, const Rational& b);

}  // namespace motivic::oracle
