#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/ff.hpp"
#include "motivic/numeric.hpp"
#include "motivic/poly.hpp"

namespace motivic {

enum class Flavor { Affine, Projective };

/// Polynomial equations over a prime field F_p. Projective systems must be
/// homogeneous and describe a subvariety of P^(d-1).
struct PolySystem {
    std::uint64_t p = 2;
    std::vector<std::string> vars;
    std::vector<ModPoly> polys;
    Flavor flavor = Flavor::Affine;

    std::size_t num_vars() const noexcept { return vars.size(); }
    friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

/// Checks the PolySystem invariants; throws ValidationError.
void validate_system(const PolySystem& sys);

/// A variety over F_q described by catalog shapes, equations, or combinators.
/// Every node carries the same base-field tag q.
class VarietyExpr {
public:
    enum class Kind { Point, Affine, Projective, Torus, Concrete, Union, Product, Complement };

    static VarietyExpr point(std::uint64_t q);
    static VarietyExpr affine(unsigned n, std::uint64_t q);
    static VarietyExpr projective(unsigned n, std::uint64_t q);
    static VarietyExpr torus(unsigned n, std::uint64_t q);
    static VarietyExpr concrete(PolySystem sys);
    static VarietyExpr disjoint_union(std::vector<VarietyExpr> parts);
    static VarietyExpr product(VarietyExpr left, VarietyExpr right);
    /// Does not validate the inclusion; point_count does.
    static VarietyExpr complement(VarietyExpr ambient, VarietyExpr closed);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t q() const noexcept { return q_; }
    /// n for Affine/Projective/Torus.
    unsigned dim() const noexcept { return n_; }
    const PolySystem& system() const;
    /// Union members; (left, right) for Product; (ambient, closed) for Complement.
    std::span<const VarietyExpr> children() const noexcept { return children_; }

    friend bool operator==(const VarietyExpr& a, const VarietyExpr& b);

private:
    Kind kind_ = Kind::Point;
    std::uint64_t q_ = 2;
    unsigned n_ = 0;
    std::shared_ptr<const PolySystem> sys_;
    std::vector<VarietyExpr> children_;
};

/// Grammar: point | A(n) | P(n) | T(n)
///        | affine [over p] vars v1,..,vd : f1 ; f2 ; ...   (proj likewise)
///        | union(X, ...) | product(X, Y) | complement(X, Z)
/// each optionally suffixed with `over q`. All tags must agree; untagged
/// input takes `default_q` or is rejected.
VarietyExpr parse_variety(std::string_view text, std::optional<std::uint64_t> default_q = std::nullopt);

/// Canonical text; parse_variety(print_variety(x)) == x.
std::string print_variety(const VarietyExpr& x);
/// Same as print_variety without the trailing ` over q`.
std::string print_variety_body(const VarietyExpr& x);

struct ClosedCheck {
    bool accepted = false;
    std::string reason;
};

/// Supported closed-inclusion patterns: Concrete in Concrete with a superset of
/// equations; Point or Concrete systems in Affine(n)/Projective(n); componentwise
/// inclusion into a DisjointUnion; identical expressions.
ClosedCheck validate_closed(const VarietyExpr& ambient, const VarietyExpr& closed);

struct CountOptions {
    std::uint64_t budget = ff::kDefaultBudget;
};

/// #X(F_{q^m}).
BigInt point_count(const VarietyExpr& x, unsigned m, const CountOptions& opts = {});

/// Closed points by degree, a_1..a_D, via Moebius inversion of the counts.
std::vector<BigInt> closed_point_profile(const VarietyExpr& x, unsigned up_to, const CountOptions& opts = {});

/// Moebius inversion of N_1..N_D into a_1..a_D; throws NonIntegralProfile.
std::vector<BigInt> profile_from_counts(std::span<const BigInt> counts);

}  // namespace motivic
