#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motivic/numeric.hpp"

namespace motivic {

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial over Z, used while parsing before the base field is known.
class IntPoly {
public:
    IntPoly() = default;
    static IntPoly constant(const BigInt& c, std::size_t nvars);
    static IntPoly variable(std::size_t index, std::size_t nvars);

    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    std::size_t nvars() const noexcept { return nvars_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly pow(unsigned e) const;

private:
    void add_term(const Exponents& e, const BigInt& c);
    std::size_t nvars_ = 0;
    std::map<Exponents, BigInt> terms_;
};

/// Multivariate polynomial over F_p; stored coefficients are in [1, p).
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::uint64_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}
    static ModPoly reduce(const IntPoly& f, std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponents, std::uint64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, std::uint64_t c);

    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    bool uses_variable(std::size_t i) const noexcept;
    unsigned max_exponent(std::size_t i) const noexcept;
    /// Nonzero constant polynomial.
    bool is_nonzero_constant() const noexcept;

    friend bool operator==(const ModPoly&, const ModPoly&) = default;
    friend auto operator<=>(const ModPoly& a, const ModPoly& b) { return a.terms_ <=> b.terms_; }

private:
    std::uint64_t p_ = 2;
    std::size_t nvars_ = 0;
    std::map<Exponents, std::uint64_t> terms_;
};

/// Terms in descending degree, then descending exponent order, e.g. "x^3 + y^2 + y".
std::string format_poly(const ModPoly& f, const std::vector<std::string>& vars);

}  // namespace motivic
