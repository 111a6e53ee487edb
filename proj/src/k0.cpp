#include "motivic/k0.hpp"

#include <algorithm>
#include <utility>

#include "motivic/error.hpp"

namespace motivic {

namespace {

void collect_union(const VarietyExpr& x, std::vector<VarietyExpr>& out) {
    if (x.kind() == VarietyExpr::Kind::Union) {
        for (const auto& c : x.children()) collect_union(c, out);
    } else {
        out.push_back(canonicalize(x));
    }
}

void check_same_field(const K0Class& a, const K0Class& b) {
    if (a.q() != b.q()) {
        throw Error(ErrorCode::BaseFieldMismatch,
                    "classes over " + std::to_string(a.q()) + " and " + std::to_string(b.q()));
    }
}

}  // namespace

VarietyExpr canonicalize(const VarietyExpr& x) {
    using K = VarietyExpr::Kind;
    switch (x.kind()) {
        case K::Union: {
            std::vector<VarietyExpr> parts;
            collect_union(x, parts);
            std::vector<std::pair<std::string, VarietyExpr>> keyed;
            for (auto& p : parts) keyed.emplace_back(print_variety(p), std::move(p));
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            parts.clear();
            for (auto& [k, v] : keyed) parts.push_back(std::move(v));
            return VarietyExpr::disjoint_union(std::move(parts));
        }
        case K::Product: {
            VarietyExpr l = canonicalize(x.children()[0]);
            VarietyExpr r = canonicalize(x.children()[1]);
            if (print_variety(r) < print_variety(l)) std::swap(l, r);
            return VarietyExpr::product(std::move(l), std::move(r));
        }
        default: return x;
    }
}

K0Class K0Class::of(const VarietyExpr& x, long coeff) {
    K0Class c(x.q());
    c.add_term(x, coeff);
    return c;
}

void K0Class::add_term(const VarietyExpr& x, long coeff) {
    if (x.q() != q_) {
        throw Error(ErrorCode::BaseFieldMismatch,
                    "term over " + std::to_string(x.q()) + " in a class over " + std::to_string(q_));
    }
    if (coeff == 0) return;
    VarietyExpr canon = canonicalize(x);
    std::string key = print_variety(canon);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{std::move(canon), coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
}

K0Class k0_add(const K0Class& a, const K0Class& b) {
    check_same_field(a, b);
    K0Class out = a;
    for (const auto& [k, t] : b.terms()) out.add_term(t.variety, t.coeff);
    return out;
}

K0Class k0_scale(const K0Class& a, long k) {
    K0Class out(a.q());
    for (const auto& [key, t] : a.terms()) out.add_term(t.variety, t.coeff * k);
    return out;
}

K0Class k0_neg(const K0Class& a) { return k0_scale(a, -1); }

K0Class k0_sub(const K0Class& a, const K0Class& b) { return k0_add(a, k0_neg(b)); }

K0Class k0_mul(const K0Class& a, const K0Class& b) {
    check_same_field(a, b);
    K0Class out(a.q());
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms())
            out.add_term(VarietyExpr::product(ta.variety, tb.variety), ta.coeff * tb.coeff);
    return out;
}

K0Class lefschetz(std::uint64_t q) {
    if (prime_power_base(q) == 0) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return K0Class::of(VarietyExpr::affine(1, q));
}

BigInt measure_counts(const K0Class& c, unsigned m, const CountOptions& opts) {
    BigInt total = 0;
    for (const auto& [k, t] : c.terms()) total += point_count(t.variety, m, opts) * t.coeff;
    return total;
}

std::vector<BigInt> measure_counts_upto(const K0Class& c, unsigned m_max, const CountOptions& opts) {
    std::vector<BigInt> out(m_max, BigInt(0));
    for (const auto& [k, t] : c.terms())
        for (unsigned m = 1; m <= m_max; ++m) out[m - 1] += point_count(t.variety, m, opts) * t.coeff;
    return out;
}

WittVector measure_zeta(const K0Class& c, std::size_t precision, const CountOptions& opts) {
    return from_pointcounts(measure_counts_upto(c, static_cast<unsigned>(precision), opts));
}

bool measure_equal(const K0Class& a, const K0Class& b, unsigned depth, const CountOptions& opts) {
    check_same_field(a, b);
    const K0Class d = k0_sub(a, b);
    for (unsigned m = 1; m <= depth; ++m)
        if (measure_counts(d, m, opts) != 0) return false;
    return true;
}

ScissorReport verify_scissor(const VarietyExpr& ambient, const VarietyExpr& closed, unsigned m_max,
                             std::size_t precision, const CountOptions& opts) {
    const ClosedCheck check = validate_closed(ambient, closed);
    if (!check.accepted) throw Error(ErrorCode::InvalidComplement, check.reason);
    const VarietyExpr open = VarietyExpr::complement(ambient, closed);

    ScissorReport rep;
    const unsigned depth = std::max<unsigned>(m_max, static_cast<unsigned>(precision));
    for (unsigned m = 1; m <= depth; ++m) {
        rep.ambient_counts.push_back(point_count(ambient, m, opts));
        rep.closed_counts.push_back(point_count(closed, m, opts));
        rep.complement_counts.push_back(point_count(open, m, opts));
    }
    for (unsigned m = 1; m <= m_max; ++m) {
        if (rep.ambient_counts[m - 1] != rep.closed_counts[m - 1] + rep.complement_counts[m - 1]) {
            rep.passed = false;
            rep.failure = "count mismatch at m = " + std::to_string(m);
            return rep;
        }
    }
    auto prefix = [&](const std::vector<BigInt>& v) {
        return from_pointcounts(std::span<const BigInt>(v.data(), precision));
    };
    const WittVector lhs = prefix(rep.ambient_counts);
    const WittVector rhs = witt_add(prefix(rep.closed_counts), prefix(rep.complement_counts));
    if (!(lhs == rhs)) {
        std::size_t i = 0;
        while (lhs.coeffs()[i] == rhs.coeffs()[i]) ++i;
        rep.passed = false;
        rep.failure = "Witt mismatch at coefficient " + std::to_string(i + 1);
    }
    return rep;
}

}  // namespace motivic
