#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace motivic {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow_big(std::uint64_t base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Reduced rational from numerator/denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_prime(std::uint64_t n) noexcept;

/// If q = p^k for a prime p and k >= 1, returns p (and sets k); else 0.
std::uint64_t prime_power_base(std::uint64_t q, unsigned* exponent = nullptr) noexcept;

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Saturating p^e; returns UINT64_MAX on overflow.
std::uint64_t pow_saturating(std::uint64_t base, unsigned exp) noexcept;

/// Moebius function.
int moebius(std::uint64_t n) noexcept;

}  // namespace motivic
