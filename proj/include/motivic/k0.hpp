#pragma once

// Free presentation of K_0(Var_{F_q}): integer combinations of variety
// expressions. Equality in the actual Grothendieck ring is not decided here;
// measure_equal compares classes through their point counts up to a depth.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motivic/numeric.hpp"
#include "motivic/variety.hpp"
#include "motivic/witt.hpp"

namespace motivic {

/// Flattens and sorts unions and sorts product factors. Complements are kept
/// as written since their inclusion check is positional.
VarietyExpr canonicalize(const VarietyExpr& x);

class K0Class {
public:
    struct Term {
        VarietyExpr variety;
        long coeff = 0;
    };

    explicit K0Class(std::uint64_t q) : q_(q) {}
    static K0Class of(const VarietyExpr& x, long coeff = 1);

    std::uint64_t q() const noexcept { return q_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Keyed by the canonical printed form.
    const std::map<std::string, Term>& terms() const noexcept { return terms_; }

    void add_term(const VarietyExpr& x, long coeff);

private:
    std::uint64_t q_;
    std::map<std::string, Term> terms_;
};

K0Class k0_add(const K0Class& a, const K0Class& b);
K0Class k0_sub(const K0Class& a, const K0Class& b);
K0Class k0_neg(const K0Class& a);
K0Class k0_scale(const K0Class& a, long k);
K0Class k0_mul(const K0Class& a, const K0Class& b);

/// The class of the affine line.
K0Class lefschetz(std::uint64_t q);

BigInt measure_counts(const K0Class& c, unsigned m, const CountOptions& opts = {});
std::vector<BigInt> measure_counts_upto(const K0Class& c, unsigned m_max, const CountOptions& opts = {});
WittVector measure_zeta(const K0Class& c, std::size_t precision, const CountOptions& opts = {});

/// Counts agree for m = 1..depth.
bool measure_equal(const K0Class& a, const K0Class& b, unsigned depth, const CountOptions& opts = {});

struct ScissorReport {
    bool passed = true;
    std::string failure;  // empty when passed
    std::vector<BigInt> ambient_counts;
    std::vector<BigInt> closed_counts;
    std::vector<BigInt> complement_counts;
};

/// N_m(X) = N_m(Z) + N_m(X - Z) for m <= m_max, and
/// zeta(X) = zeta(Z) + zeta(X - Z) in W(Z) to the given precision.
/// Throws InvalidComplement when the inclusion is not a supported pattern.
ScissorReport verify_scissor(const VarietyExpr& ambient, const VarietyExpr& closed, unsigned m_max,
                             std::size_t precision, const CountOptions& opts = {});

}  // namespace motivic
