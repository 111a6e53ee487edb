#pragma once

// Truncated big Witt vectors W(Z).
//
// Convention: a Witt vector is a power series 1 + a_1 t + ... + a_N t^N with
// integer coefficients. Addition in W is multiplication of series; the ghost
// components g_m are defined by t f'(t) / f(t) = sum_{m >= 1} g_m t^m, and
// multiplication in W is the unique operation making ghosts multiplicative.
// For the zeta function of a variety over F_q the ghosts are the point counts
// #X(F_{q^m}).

#include <cstddef>
#include <span>
#include <vector>

#include "motivic/numeric.hpp"

namespace motivic {

inline constexpr std::size_t kDefaultPrecision = 16;

class WittVector {
public:
    /// coeffs = a_1..a_N, N >= 1.
    explicit WittVector(std::vector<BigInt> coeffs);
    /// The additive identity: the series 1.
    static WittVector zero(std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const WittVector&, const WittVector&) = default;

private:
    std::vector<BigInt> coeffs_;
};

using GhostSeq = std::vector<Rational>;

GhostSeq ghost(const WittVector& w);

/// Strict mode: throws NonIntegralSeries when some coefficient is not an integer.
WittVector ghost_inverse(std::span<const Rational> ghosts);
/// Rational mode: coefficients of the unique series in 1 + tQ[[t]] with the given ghosts.
std::vector<Rational> ghost_inverse_rational(std::span<const Rational> ghosts);

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);

/// tau(m) = 1 / (1 - m t), ghosts m, m^2, ...
WittVector teichmuller(const BigInt& m, std::size_t precision);

/// exp(sum N_m t^m / m), i.e. the Witt vector with ghosts N_1..N_D.
WittVector from_pointcounts(std::span<const BigInt> counts);

/// prod_d (1 - t^d)^(-a_d) truncated to `precision` (<= profile length).
WittVector euler_product(std::span<const BigInt> profile, std::size_t precision);

}  // namespace motivic
