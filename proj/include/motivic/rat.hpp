#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motivic/numeric.hpp"
#include "motivic/witt.hpp"

namespace motivic {

/// c_m = sum_{j=1..order} coeffs[j-1] * c_{m-j}
struct Recurrence {
    std::size_t order = 0;
    std::vector<Rational> coeffs;
};

/// Minimal-order linear recurrence (order <= max_order) holding on the whole
/// window, by exact elimination on the Hankel system. Needs at least
/// 2 * max_order + 2 terms (InsufficientData).
std::optional<Recurrence> min_recurrence(std::span<const BigInt> seq, std::size_t max_order);

/// numerator / denominator in Z[t], both with constant term 1, coprime over Q.
struct RationalFn {
    std::vector<BigInt> numerator{1};
    std::vector<BigInt> denominator{1};

    friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

/// Expansion to `terms` coefficients (t^0 .. t^(terms-1)).
std::vector<BigInt> expand(const RationalFn& f, std::size_t terms);

/// Same rational function (cross-multiplication).
bool equivalent(const RationalFn& a, const RationalFn& b);

/// prod (1 - r t)^e over (root, exponent) pairs; exponents may be negative.
RationalFn from_linear_factors(std::span<const std::pair<BigInt, long>> factors);

/// Rational function with numerator and denominator degrees <= max_degree whose
/// expansion matches every coefficient of w. Throws NoRationalForm,
/// NonIntegralCoefficients, InsufficientData (precision < 2 * max_degree + 2).
RationalFn to_rational(const WittVector& w, std::size_t max_degree);

struct WeilReport {
    bool passed = false;
    std::size_t genus = 0;
    bool denominator_ok = false;
    bool even_degree = false;
    bool symmetric = false;
    bool riemann = false;
    std::vector<long double> root_abs;  // |reciprocal roots|
    std::vector<std::string> failures;
};

/// Weil-conjecture checks for the zeta function of a smooth projective curve over F_q.
WeilReport weil_validate(const RationalFn& f, std::uint64_t q);

inline constexpr long double kRiemannTolerance = 1e-9L;

std::string format_rational_fn(const RationalFn& f);

}  // namespace motivic
