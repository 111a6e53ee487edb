#include "motivic/count_kernels.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "motivic/error.hpp"
#include "motivic/ff.hpp"

namespace motivic::kernels {

namespace {

// Polynomial-basis arithmetic through FieldCtx.
struct GenericArith {
    ff::FieldCtx ctx;
    using Elem = ff::FieldElem;

    std::uint64_t p() const { return ctx.characteristic(); }
    unsigned m() const { return ctx.degree(); }
    Elem zero() const { return ctx.zero(); }
    Elem one() const { return ctx.one(); }
    Elem from_index(std::uint64_t i) const { return ctx.from_index(i); }
    Elem from_int(std::uint64_t v) const { return ctx.from_int(static_cast<std::int64_t>(v)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return ctx.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return ctx.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return ctx.mul(a, b); }
    Elem inv(const Elem& a) const { return ctx.inv(a); }
};

// Elements are discrete logs to a primitive base; zero is the sentinel Q - 1.
struct ZechTables {
    std::uint64_t p = 2;
    unsigned m = 1;
    std::uint32_t order = 1;  // Q - 1
    std::uint32_t half = 0;   // log(-1)
    std::vector<std::uint32_t> log_of_index;
    std::vector<std::uint32_t> zech;  // log(1 + g^k)
};

std::shared_ptr<const ZechTables> build_zech(const ff::FieldCtx& ctx) {
    auto t = std::make_shared<ZechTables>();
    const std::uint64_t q = ctx.size();
    const std::uint64_t p = ctx.characteristic();
    t->p = p;
    t->m = ctx.degree();
    t->order = static_cast<std::uint32_t>(q - 1);
    const auto factors = prime_factors(q - 1);
    ff::FieldElem g;
    bool found = false;
    for (std::uint64_t idx = 1; idx < q && !found; ++idx) {
        g = ctx.from_index(idx);
        found = std::all_of(factors.begin(), factors.end(),
                            [&](std::uint64_t r) { return ctx.pow(g, (q - 1) / r) != ctx.one(); });
    }
    if (!found) throw Error(ErrorCode::Internal, "no primitive element found");

    const std::uint32_t zero_log = t->order;
    t->log_of_index.assign(q, zero_log);
    std::vector<std::uint32_t> index_of_log(q - 1);
    ff::FieldElem cur = ctx.one();
    for (std::uint32_t k = 0; k < t->order; ++k) {
        const auto idx = static_cast<std::uint32_t>(ctx.to_index(cur));
        t->log_of_index[idx] = k;
        index_of_log[k] = idx;
        cur = ctx.mul(g, cur);
    }
    t->zech.resize(t->order);
    for (std::uint32_t k = 0; k < t->order; ++k) {
        const std::uint64_t idx = index_of_log[k];
        const std::uint64_t d0 = idx % p;
        const std::uint64_t plus_one = idx - d0 + (d0 + 1) % p;
        t->zech[k] = t->log_of_index[plus_one];
    }
    t->half = (p == 2) ? 0 : t->order / 2;
    return t;
}

std::shared_ptr<const ZechTables> zech_for(const ff::FieldCtx& ctx) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const ZechTables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[ctx.id()];
    if (!slot) slot = build_zech(ctx);
    return slot;
}

struct ZechArith {
    std::shared_ptr<const ZechTables> t;
    using Elem = std::uint32_t;

    std::uint64_t p() const { return t->p; }
    unsigned m() const { return t->m; }
    Elem zero() const { return t->order; }
    Elem one() const { return 0; }
    Elem from_index(std::uint64_t i) const { return t->log_of_index[i]; }
    Elem from_int(std::uint64_t v) const { return t->log_of_index[v % t->p]; }
    bool is_zero(Elem a) const { return a == t->order; }
    Elem mul(Elem a, Elem b) const {
        const std::uint32_t n = t->order;
        if (a == n || b == n) return n;
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= n ? s - n : s);
    }
    Elem add(Elem a, Elem b) const {
        const std::uint32_t n = t->order;
        if (a == n) return b;
        if (b == n) return a;
        const std::uint32_t d = b >= a ? b - a : b + n - a;
        const std::uint32_t z = t->zech[d];
        if (z == n) return n;
        const std::uint64_t s = std::uint64_t{a} + z;
        return static_cast<Elem>(s >= n ? s - n : s);
    }
    Elem neg(Elem a) const {
        const std::uint32_t n = t->order;
        if (a == n || t->p == 2) return a;
        const std::uint64_t s = std::uint64_t{a} + t->half;
        return static_cast<Elem>(s >= n ? s - n : s);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const {
        if (a == t->order) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        return a == 0 ? 0 : t->order - a;
    }
};

// Dense univariate polynomials over an Arith, low-to-high.
template <class A>
struct UniPoly {
    using E = typename A::Elem;
    const A& f;

    void trim(std::vector<E>& a) const {
        while (!a.empty() && f.is_zero(a.back())) a.pop_back();
    }
    void make_monic(std::vector<E>& a) const {
        const E li = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, li);
    }
    // a mod b, b monic
    void rem(std::vector<E>& a, const std::vector<E>& b) const {
        trim(a);
        const std::size_t db = b.size() - 1;
        while (a.size() >= b.size()) {
            const E c = a.back();
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
            a.pop_back();
            trim(a);
        }
    }
    std::vector<E> mulmod(const std::vector<E>& a, const std::vector<E>& b, const std::vector<E>& g) const {
        if (a.empty() || b.empty()) return {};
        std::vector<E> prod(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (f.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        }
        rem(prod, g);
        return prod;
    }
    std::vector<E> powmod(std::vector<E> base, std::uint64_t e, const std::vector<E>& g) const {
        std::vector<E> r{f.one()};
        rem(r, g);
        while (e) {
            if (e & 1) r = mulmod(r, base, g);
            e >>= 1;
            if (e) base = mulmod(base, base, g);
        }
        return r;
    }
    // Monic gcd; both inputs trimmed, a nonzero.
    std::vector<E> gcd(std::vector<E> a, std::vector<E> b) const {
        trim(a);
        trim(b);
        if (a.empty()) std::swap(a, b);
        make_monic(a);
        while (!b.empty()) {
            make_monic(b);
            rem(a, b);
            std::swap(a, b);
        }
        return a;
    }
    // Distinct roots in F_{p^m} of monic g: deg gcd(g, y^(p^m) - y).
    std::uint64_t count_roots(const std::vector<E>& g) const {
        const std::size_t deg = g.size() - 1;
        if (deg == 0) return 0;
        if (deg == 1) return 1;
        std::vector<E> y{f.zero(), f.one()};
        std::vector<E> h = y;
        rem(h, g);
        for (unsigned i = 0; i < f.m(); ++i) h = powmod(h, f.p(), g);
        // h - y
        if (h.size() < 2) h.resize(2, f.zero());
        h[1] = f.sub(h[1], f.one());
        trim(h);
        if (h.empty()) return deg;
        return gcd(g, h).size() - 1;
    }
};

struct CompiledTerm {
    std::uint64_t coef;
    std::vector<unsigned> other_exps;  // exponents of the enumerated variables
    unsigned fiber_exp;
};

struct Plan {
    bool empty = false;     // a nonzero constant equation
    std::size_t free_vars = 0;
    std::vector<std::size_t> others;  // enumerated constrained variables
    std::vector<unsigned> other_max;
    unsigned fiber_max = 0;
    bool has_fiber = false;
    std::vector<std::vector<CompiledTerm>> polys;
};

Plan make_plan(const PolySystem& sys) {
    Plan plan;
    std::vector<const ModPoly*> live;
    for (const auto& f : sys.polys) {
        if (f.is_zero()) continue;
        if (f.is_nonzero_constant()) {
            plan.empty = true;
            return plan;
        }
        live.push_back(&f);
    }
    const std::size_t d = sys.num_vars();
    std::vector<std::size_t> constrained;
    std::vector<unsigned> maxexp(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto* f : live) maxexp[i] = std::max(maxexp[i], f->max_exponent(i));
        if (maxexp[i] > 0) constrained.push_back(i);
    }
    plan.free_vars = d - constrained.size();
    if (constrained.empty()) return plan;
    // Fiber variable: smallest degree, ties broken towards the last variable.
    std::size_t fiber = constrained.front();
    for (std::size_t v : constrained)
        if (maxexp[v] <= maxexp[fiber]) fiber = v;
    plan.has_fiber = true;
    plan.fiber_max = maxexp[fiber];
    for (std::size_t v : constrained) {
        if (v == fiber) continue;
        plan.others.push_back(v);
        plan.other_max.push_back(maxexp[v]);
    }
    for (const auto* f : live) {
        std::vector<CompiledTerm> terms;
        for (const auto& [e, c] : f->terms()) {
            CompiledTerm t{c, {}, e[fiber]};
            for (std::size_t v : plan.others) t.other_exps.push_back(e[v]);
            terms.push_back(std::move(t));
        }
        plan.polys.push_back(std::move(terms));
    }
    return plan;
}

template <class A>
BigInt run_fibers(const A& arith, const Plan& plan, std::uint64_t budget) {
    using E = typename A::Elem;
    const std::uint64_t p = arith.p();
    const unsigned m = arith.m();
    const BigInt q_big = pow_big(p, m);
    if (plan.empty) return 0;
    BigInt free_factor = pow_big(q_big, static_cast<unsigned long>(plan.free_vars));
    if (!plan.has_fiber) return free_factor;

    const std::size_t k = plan.others.size();
    const BigInt fibers_big = pow_big(q_big, static_cast<unsigned long>(k));
    if (fibers_big > BigInt(static_cast<unsigned long>(budget))) {
        throw Error(ErrorCode::BudgetExceeded, "enumeration of " + fibers_big.get_str() +
                                                   " fibers exceeds budget " + std::to_string(budget));
    }
    const std::uint64_t q = k == 0 ? 1 : q_big.get_ui();
    const std::uint64_t fibers = fibers_big.get_ui();

    std::vector<std::vector<std::pair<E, const CompiledTerm*>>> compiled(plan.polys.size());
    for (std::size_t i = 0; i < plan.polys.size(); ++i)
        for (const auto& t : plan.polys[i]) compiled[i].emplace_back(arith.from_int(t.coef), &t);

    std::uint64_t zero_fibers = 0;
    std::uint64_t roots = 0;
    const auto nfib = static_cast<std::int64_t>(fibers);

#pragma omp parallel reduction(+ : zero_fibers, roots)
    {
        UniPoly<A> up{arith};
        std::vector<std::vector<E>> powers(k);
        std::vector<E> acc, g;
#pragma omp for schedule(static)
        for (std::int64_t f = 0; f < nfib; ++f) {
            std::uint64_t idx = static_cast<std::uint64_t>(f);
            for (std::size_t j = 0; j < k; ++j) {
                const E x = arith.from_index(idx % q);
                idx /= q;
                auto& pw = powers[j];
                pw.assign(plan.other_max[j] + 1, arith.one());
                for (unsigned e = 1; e <= plan.other_max[j]; ++e) pw[e] = arith.mul(pw[e - 1], x);
            }
            g.clear();
            bool all_zero = true;
            for (const auto& terms : compiled) {
                acc.assign(plan.fiber_max + 1, arith.zero());
                for (const auto& [c, t] : terms) {
                    E v = c;
                    for (std::size_t j = 0; j < k; ++j) v = arith.mul(v, powers[j][t->other_exps[j]]);
                    acc[t->fiber_exp] = arith.add(acc[t->fiber_exp], v);
                }
                up.trim(acc);
                if (acc.empty()) continue;
                all_zero = false;
                if (g.empty()) {
                    g = acc;
                    up.make_monic(g);
                } else if (g.size() > 1) {
                    g = up.gcd(g, acc);
                }
            }
            if (all_zero) {
                ++zero_fibers;
            } else {
                roots += up.count_roots(g);
            }
        }
    }
    return (BigInt(static_cast<unsigned long>(zero_fibers)) * q_big + BigInt(static_cast<unsigned long>(roots))) *
           free_factor;
}

BigInt affine_parallel(const PolySystem& sys, unsigned m, std::uint64_t budget, bool allow_zech) {
    const ff::FieldCtx ctx = ff::build_extension(sys.p, m);
    const Plan plan = make_plan(sys);
    if (allow_zech && ctx.size() <= kZechLimit) return run_fibers(ZechArith{zech_for(ctx)}, plan, budget);
    return run_fibers(GenericArith{ctx}, plan, budget);
}

// Restriction of a projective system to the chart x_k = 1, x_j = 0 for j > k,
// as an affine system in x_0..x_{k-1}.
PolySystem chart(const PolySystem& sys, std::size_t k) {
    PolySystem out;
    out.p = sys.p;
    out.flavor = Flavor::Affine;
    out.vars.assign(sys.vars.begin(), sys.vars.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& f : sys.polys) {
        ModPoly g(sys.p, k);
        for (const auto& [e, c] : f.terms()) {
            bool vanishes = false;
            for (std::size_t j = k + 1; j < e.size(); ++j) vanishes |= e[j] > 0;
            if (vanishes) continue;
            g.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)), c);
        }
        out.polys.push_back(std::move(g));
    }
    return out;
}

}  // namespace

BigInt count_affine_parallel(const PolySystem& sys, unsigned m, std::uint64_t budget) {
    return affine_parallel(sys, m, budget, true);
}

BigInt count_affine_parallel_generic(const PolySystem& sys, unsigned m, std::uint64_t budget) {
    return affine_parallel(sys, m, budget, false);
}

BigInt count_system(const PolySystem& sys, unsigned m, std::uint64_t budget) {
    if (sys.flavor == Flavor::Affine) return count_affine_parallel(sys, m, budget);
    BigInt total = 0;
    for (std::size_t k = sys.num_vars(); k-- > 0;) total += count_affine_parallel(chart(sys, k), m, budget);
    return total;
}

BigInt count_affine_serial(const PolySystem& sys, unsigned m, std::uint64_t budget) {
    const ff::FieldCtx ctx = ff::build_extension(sys.p, m);
    const std::size_t d = sys.num_vars();
    const BigInt total_big = pow_big(pow_big(sys.p, m), static_cast<unsigned long>(d));
    if (total_big > BigInt(static_cast<unsigned long>(budget))) {
        throw Error(ErrorCode::BudgetExceeded,
                    "enumeration of " + total_big.get_str() + " points exceeds budget " + std::to_string(budget));
    }
    const std::uint64_t q = ctx.size();
    const std::uint64_t total = total_big.get_ui();

    struct Term {
        ff::FieldElem coef;
        Exponents exps;
    };
    std::vector<std::vector<Term>> polys;
    for (const auto& f : sys.polys) {
        std::vector<Term> terms;
        for (const auto& [e, c] : f.terms()) terms.push_back({ctx.from_int(static_cast<std::int64_t>(c)), e});
        polys.push_back(std::move(terms));
    }
    std::uint64_t count = 0;
    std::vector<ff::FieldElem> point(d);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < d; ++i) {
            point[i] = ctx.from_index(rest % q);
            rest /= q;
        }
        bool ok = true;
        for (const auto& terms : polys) {
            ff::FieldElem v = ctx.zero();
            for (const auto& t : terms) {
                ff::FieldElem mono = t.coef;
                for (std::size_t i = 0; i < d; ++i)
                    if (t.exps[i]) mono = ctx.mul(mono, ctx.pow(point[i], t.exps[i]));
                v = ctx.add(v, mono);
            }
            if (!v.is_zero()) {
                ok = false;
                break;
            }
        }
        count += ok ? 1 : 0;
    }
    return BigInt(static_cast<unsigned long>(count));
}

BigInt count_system_reference(const PolySystem& sys, unsigned m, std::uint64_t budget) {
    const BigInt affine = count_affine_serial(sys, m, budget);
    if (sys.flavor == Flavor::Affine) return affine;
    const bool has_constant = std::any_of(sys.polys.begin(), sys.polys.end(),
                                          [](const ModPoly& f) { return f.is_nonzero_constant(); });
    if (has_constant) return 0;
    // The origin always solves a homogeneous system of positive degree.
    const BigInt nonzero = affine - 1;
    const BigInt units = pow_big(sys.p, m) - 1;
    if (nonzero % units != 0) {
        throw Error(ErrorCode::Internal, "nonzero cone solutions " + nonzero.get_str() +
                                             " not divisible by " + units.get_str() + " (inhomogeneous system?)");
    }
    return nonzero / units;
}

}  // namespace motivic::kernels
