#include "motivic/variety.hpp"

#include <algorithm>
#include <string>

#include "motivic/count_kernels.hpp"
#include "motivic/error.hpp"

namespace motivic {

namespace {

void require_same_q(std::uint64_t a, std::uint64_t b) {
    if (a != b) {
        throw Error(ErrorCode::BaseFieldMismatch,
                    "base fields differ: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

void validate_system(const PolySystem& sys) {
    if (!is_prime(sys.p)) throw Error(ErrorCode::ValidationError, "equations need a prime base field");
    if (sys.vars.empty()) throw Error(ErrorCode::ValidationError, "a polynomial system needs at least one variable");
    for (const auto& f : sys.polys) {
        if (f.p() != sys.p || f.nvars() != sys.num_vars()) {
            throw Error(ErrorCode::ValidationError, "polynomial does not match the system's field or variables");
        }
        if (sys.flavor == Flavor::Projective && !f.is_homogeneous()) {
            throw Error(ErrorCode::ValidationError,
                        "projective equation is not homogeneous: " + format_poly(f, sys.vars));
        }
    }
}

VarietyExpr VarietyExpr::point(std::uint64_t q) {
    VarietyExpr x;
    x.kind_ = Kind::Point;
    x.q_ = q;
    return x;
}

VarietyExpr VarietyExpr::affine(unsigned n, std::uint64_t q) {
    VarietyExpr x = point(q);
    x.kind_ = Kind::Affine;
    x.n_ = n;
    return x;
}

VarietyExpr VarietyExpr::projective(unsigned n, std::uint64_t q) {
    VarietyExpr x = affine(n, q);
    x.kind_ = Kind::Projective;
    return x;
}

VarietyExpr VarietyExpr::torus(unsigned n, std::uint64_t q) {
    VarietyExpr x = affine(n, q);
    x.kind_ = Kind::Torus;
    return x;
}

VarietyExpr VarietyExpr::concrete(PolySystem sys) {
    validate_system(sys);
    VarietyExpr x = point(sys.p);
    x.kind_ = Kind::Concrete;
    x.sys_ = std::make_shared<const PolySystem>(std::move(sys));
    return x;
}

VarietyExpr VarietyExpr::disjoint_union(std::vector<VarietyExpr> parts) {
    if (parts.empty()) throw Error(ErrorCode::ValidationError, "union needs at least one part");
    VarietyExpr x = point(parts.front().q());
    for (const auto& c : parts) require_same_q(x.q_, c.q());
    x.kind_ = Kind::Union;
    x.children_ = std::move(parts);
    return x;
}

VarietyExpr VarietyExpr::product(VarietyExpr left, VarietyExpr right) {
    require_same_q(left.q(), right.q());
    VarietyExpr x = point(left.q());
    x.kind_ = Kind::Product;
    x.children_ = {std::move(left), std::move(right)};
    return x;
}

VarietyExpr VarietyExpr::complement(VarietyExpr ambient, VarietyExpr closed) {
    require_same_q(ambient.q(), closed.q());
    VarietyExpr x = point(ambient.q());
    x.kind_ = Kind::Complement;
    x.children_ = {std::move(ambient), std::move(closed)};
    return x;
}

const PolySystem& VarietyExpr::system() const {
    if (kind_ != Kind::Concrete) throw Error(ErrorCode::ValidationError, "not a concrete variety");
    return *sys_;
}

bool operator==(const VarietyExpr& a, const VarietyExpr& b) {
    if (a.kind_ != b.kind_ || a.q_ != b.q_ || a.n_ != b.n_) return false;
    if (a.kind_ == VarietyExpr::Kind::Concrete && !(*a.sys_ == *b.sys_)) return false;
    return a.children_ == b.children_;
}

ClosedCheck validate_closed(const VarietyExpr& ambient, const VarietyExpr& closed) {
    using K = VarietyExpr::Kind;
    if (ambient.q() != closed.q()) return {false, "base fields differ"};
    if (ambient == closed) return {true, "identical"};

    if (ambient.kind() == K::Concrete && closed.kind() == K::Concrete) {
        const auto& a = ambient.system();
        const auto& c = closed.system();
        if (a.flavor != c.flavor) return {false, "affine/projective flavors differ"};
        if (a.vars != c.vars) return {false, "variables differ"};
        for (const auto& f : a.polys) {
            if (f.is_zero()) continue;
            if (std::find(c.polys.begin(), c.polys.end(), f) == c.polys.end()) {
                return {false, "closed equations do not contain " + format_poly(f, a.vars)};
            }
        }
        return {true, "added equations"};
    }
    if (ambient.kind() == K::Affine || ambient.kind() == K::Projective) {
        const bool proj = ambient.kind() == K::Projective;
        if (closed.kind() == K::Point) return {true, proj ? "rational point" : "origin"};
        if (closed.kind() == K::Concrete) {
            const auto& c = closed.system();
            const std::size_t want = ambient.dim() + (proj ? 1 : 0);
            if ((c.flavor == Flavor::Projective) != proj) return {false, "affine/projective flavors differ"};
            if (c.num_vars() != want) {
                return {false, "expected " + std::to_string(want) + " variables, got " + std::to_string(c.num_vars())};
            }
            return {true, "zero locus in ambient coordinates"};
        }
    }
    if (ambient.kind() == K::Union) {
        const auto parts = ambient.children();
        if (closed.kind() == K::Union && closed.children().size() == parts.size()) {
            const auto cparts = closed.children();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                auto r = validate_closed(parts[i], cparts[i]);
                if (!r.accepted) return {false, "component " + std::to_string(i + 1) + ": " + r.reason};
            }
            return {true, "componentwise"};
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (validate_closed(parts[i], closed).accepted) return {true, "inside component " + std::to_string(i + 1)};
        }
        return {false, "no union component contains the closed part"};
    }
    return {false, "not a supported closed-inclusion pattern"};
}

BigInt point_count(const VarietyExpr& x, unsigned m, const CountOptions& opts) {
    using K = VarietyExpr::Kind;
    if (m < 1) throw Error(ErrorCode::ValidationError, "extension degree m must be >= 1");
    const BigInt qm = pow_big(x.q(), m);
    switch (x.kind()) {
        case K::Point: return 1;
        case K::Affine: return pow_big(qm, x.dim());
        case K::Projective: {
            BigInt s = 0;
            for (unsigned i = 0; i <= x.dim(); ++i) s += pow_big(qm, i);
            return s;
        }
        case K::Torus: return pow_big(BigInt(qm - 1), x.dim());
        case K::Concrete: return kernels::count_system(x.system(), m, opts.budget);
        case K::Union: {
            BigInt s = 0;
            for (const auto& c : x.children()) s += point_count(c, m, opts);
            return s;
        }
        case K::Product: return point_count(x.children()[0], m, opts) * point_count(x.children()[1], m, opts);
        case K::Complement: {
            const auto c = x.children();
            auto check = validate_closed(c[0], c[1]);
            if (!check.accepted) throw Error(ErrorCode::InvalidComplement, check.reason);
            return point_count(c[0], m, opts) - point_count(c[1], m, opts);
        }
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

std::vector<BigInt> profile_from_counts(std::span<const BigInt> counts) {
    std::vector<BigInt> a(counts.size());
    for (std::size_t d = 1; d <= counts.size(); ++d) {
        BigInt s = 0;
        for (std::size_t e = 1; e <= d; ++e) {
            if (d % e) continue;
            s += moebius(d / e) * counts[e - 1];
        }
        if (s % static_cast<unsigned long>(d) != 0 || s < 0) {
            throw Error(ErrorCode::NonIntegralProfile, "degree-" + std::to_string(d) +
                                                           " closed-point count is not a nonnegative integer");
        }
        a[d - 1] = s / static_cast<unsigned long>(d);
    }
    return a;
}

std::vector<BigInt> closed_point_profile(const VarietyExpr& x, unsigned up_to, const CountOptions& opts) {
    std::vector<BigInt> counts;
    for (unsigned m = 1; m <= up_to; ++m) counts.push_back(point_count(x, m, opts));
    return profile_from_counts(counts);
}

}  // namespace motivic
