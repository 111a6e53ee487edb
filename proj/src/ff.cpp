#include "motivic/ff.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "motivic/error.hpp"
#include "motivic/numeric.hpp"

namespace motivic::ff {

namespace {

using Poly = std::vector<std::uint64_t>;  // dense over F_p, low-to-high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qt = r / nr;
        t = std::exchange(nt, t - qt * nt);
        r = std::exchange(nr, r - qt * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// a mod b, b nonzero
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return poly_rem(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return poly_rem(std::move(r), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
    Poly f(coeffs.begin(), coeffs.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    // x^(p^k) mod f for k = 1..n
    std::vector<Poly> frob(n + 1);
    frob[0] = poly_rem(Poly{0, 1}, f, p);
    for (std::size_t k = 1; k <= n; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
    const Poly x = poly_rem(Poly{0, 1}, f, p);
    if (!poly_sub(frob[n], x, p).empty()) return false;
    for (std::uint64_t r : prime_factors(n)) {
        Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool FieldElem::is_zero() const noexcept {
    for (unsigned i = 0; i < n_; ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

FieldCtx make_field_ctx(std::uint64_t p, std::span<const std::uint32_t> modulus) {
    FieldCtx ctx;
    ctx.p_ = p;
    ctx.n_ = static_cast<unsigned>(modulus.size() - 1);
    ctx.size_ = pow_saturating(p, ctx.n_);
    for (std::size_t i = 0; i < modulus.size(); ++i) ctx.mod_[i] = modulus[i];
    const unsigned n = ctx.n_;
    if (n >= 2) {
        // x^(n+k) mod f, k = 0..n-2
        ctx.reduce_.assign(static_cast<std::size_t>(n - 1) * n, 0);
        std::vector<std::uint64_t> cur(n);
        for (unsigned j = 0; j < n; ++j) cur[j] = (p - modulus[j]) % p;  // x^n
        for (unsigned k = 0; k + 1 < n; ++k) {
            for (unsigned j = 0; j < n; ++j) ctx.reduce_[k * n + j] = static_cast<std::uint32_t>(cur[j]);
            // cur *= x
            const std::uint64_t top = cur[n - 1];
            for (unsigned j = n - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (unsigned j = 0; j < n; ++j) cur[j] = (cur[j] + mulmod(top, (p - modulus[j]) % p, p)) % p;
        }
    }
    return ctx;
}

FieldCtx build_extension(std::uint64_t p, unsigned n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p > kMaxCharacteristic) {
        throw Error(ErrorCode::ValidationError, "characteristic " + std::to_string(p) + " exceeds 2^31 - 1");
    }
    if (n < 1 || n > kMaxDegree) {
        throw Error(ErrorCode::DegreeOutOfRange,
                    "extension degree " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDegree) + "]");
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldCtx> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
    }

    std::vector<std::uint32_t> modulus(n + 1, 0);
    modulus[n] = 1;
    if (n > 1) {
        // Odometer over (c0, ..., c_{n-1}) with c_{n-1} fastest; c0 = 0 is divisible by x.
        std::vector<std::uint64_t> tail(n, 0);
        tail[0] = 1;
        for (;;) {
            std::vector<std::uint64_t> f(tail);
            f.push_back(1);
            if (is_irreducible(f, p)) break;
            std::size_t i = n - 1;
            while (true) {
                if (++tail[i] < p) break;
                tail[i] = 0;
                if (i == 0) throw Error(ErrorCode::Internal, "no irreducible polynomial found");
                --i;
            }
        }
        for (unsigned i = 0; i < n; ++i) modulus[i] = static_cast<std::uint32_t>(tail[i]);
    }
    FieldCtx ctx = make_field_ctx(p, modulus);
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(p, n), ctx);
    return ctx;
}

FieldElem FieldCtx::blank() const noexcept {
    FieldElem e;
    e.ctx_ = id();
    e.n_ = n_;
    return e;
}

void FieldCtx::check(const FieldElem& a) const {
    if (!owns(a)) {
        throw Error(ErrorCode::ContextMismatch, "element does not belong to F_" + std::to_string(p_) + "^" +
                                                    std::to_string(n_));
    }
}

FieldElem FieldCtx::zero() const noexcept { return blank(); }

FieldElem FieldCtx::one() const noexcept {
    FieldElem e = blank();
    e.c_[0] = 1;
    return e;
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
    FieldElem e = blank();
    const auto p = static_cast<std::int64_t>(p_);
    e.c_[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
    return e;
}

FieldElem FieldCtx::element(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > n_) {
        throw Error(ErrorCode::ValidationError, "too many coefficients for a degree-" + std::to_string(n_) + " field");
    }
    FieldElem e = blank();
    const auto p = static_cast<std::int64_t>(p_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        e.c_[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
    }
    return e;
}

FieldElem FieldCtx::gen() const noexcept {
    FieldElem e = blank();
    if (n_ == 1) {
        // x reduced mod the placeholder modulus x is 0
        return e;
    }
    e.c_[1] = 1;
    return e;
}

FieldElem FieldCtx::from_index(std::uint64_t index) const noexcept {
    FieldElem e = blank();
    for (unsigned i = 0; i < n_; ++i) {
        e.c_[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t FieldCtx::to_index(const FieldElem& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * p_ + a.c_[i];
    return idx;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = blank();
    for (unsigned i = 0; i < n_; ++i) {
        const std::uint64_t s = std::uint64_t{a.c_[i]} + b.c_[i];
        r.c_[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = blank();
    for (unsigned i = 0; i < n_; ++i) {
        const std::uint64_t s = std::uint64_t{a.c_[i]} + p_ - b.c_[i];
        r.c_[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    check(a);
    FieldElem r = blank();
    for (unsigned i = 0; i < n_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - a.c_[i]);
    return r;
}

namespace {

template <class Acc>
void mul_reduce(const std::uint32_t* a, const std::uint32_t* b, unsigned n, std::uint64_t p,
                const std::vector<std::uint32_t>& reduce, std::uint32_t* out) {
    std::array<Acc, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) prod[i + j] += static_cast<Acc>(a[i]) * b[j];
    }
    std::array<Acc, kMaxDegree> acc{};
    for (unsigned j = 0; j < n; ++j) acc[j] = prod[j] % p;
    for (unsigned k = 0; k + 1 < n; ++k) {
        const Acc c = prod[n + k] % p;
        if (c == 0) continue;
        const std::uint32_t* row = &reduce[static_cast<std::size_t>(k) * n];
        for (unsigned j = 0; j < n; ++j) acc[j] += c * row[j];
    }
    for (unsigned j = 0; j < n; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p);
}

}  // namespace

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = blank();
    if (n_ == 1) {
        r.c_[0] = static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p_);
        return r;
    }
    // Products below 2^52 leave room for 2^11 accumulated terms in 64 bits.
    if (p_ < (std::uint64_t{1} << 26)) {
        mul_reduce<std::uint64_t>(a.c_.data(), b.c_.data(), n_, p_, reduce_, r.c_.data());
    } else {
        mul_reduce<unsigned __int128>(a.c_.data(), b.c_.data(), n_, p_, reduce_, r.c_.data());
    }
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    // Extended Euclid in F_p[x]: s * a + t * f = gcd = const.
    Poly f(mod_.begin(), mod_.begin() + n_ + 1);
    Poly r0 = f, r1(a.c_.begin(), a.c_.begin() + n_);
    trim(r1);
    Poly s0, s1{1};
    auto mul_sub = [&](const Poly& x, const Poly& q, const Poly& y) {
        // x - q*y
        Poly prod(q.size() + y.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + mulmod(q[i], y[j], p_)) % p_;
        return poly_sub(x, prod, p_);
    };
    while (r1.size() > 1) {
        // polynomial division r0 = q * r1 + rem
        Poly q(r0.size() - r1.size() + 1, 0), rem = r0;
        const std::uint64_t lead_inv = inv_mod(r1.back(), p_);
        while (rem.size() >= r1.size()) {
            const std::uint64_t c = mulmod(rem.back(), lead_inv, p_);
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + p_ - mulmod(c, r1[i], p_)) % p_;
            trim(rem);
        }
        trim(q);
        Poly s2 = mul_sub(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    const std::uint64_t c = inv_mod(r1[0], p_);
    FieldElem r = blank();
    Poly s = poly_rem(s1, f, p_);
    for (std::size_t i = 0; i < s.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(mulmod(s[i], c, p_));
    return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, std::uint64_t e) const {
    check(a);
    FieldElem r = one();
    FieldElem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

FieldElem ff_op(const FieldCtx& ctx, FieldOp kind, const FieldElem& a, const std::optional<FieldElem>& b) {
    if (kind == FieldOp::Inv) return ctx.inv(a);
    if (!b) throw Error(ErrorCode::ValidationError, "binary field operation needs two operands");
    switch (kind) {
        case FieldOp::Add: return ctx.add(a, *b);
        case FieldOp::Sub: return ctx.sub(a, *b);
        case FieldOp::Mul: return ctx.mul(a, *b);
        case FieldOp::Inv: break;
    }
    return ctx.inv(a);
}

FieldElem ff_pow(const FieldCtx& ctx, const FieldElem& a, std::uint64_t e) { return ctx.pow(a, e); }

FieldElem frobenius(const FieldCtx& ctx, const FieldElem& a) { return ctx.frobenius(a); }

std::vector<FieldElem> enumerate_field(const FieldCtx& ctx, std::uint64_t budget) {
    const std::uint64_t q = ctx.size();
    if (q > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "field of size " + std::to_string(q) + " exceeds enumeration budget " + std::to_string(budget));
    }
    std::vector<FieldElem> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(ctx.from_index(i));
    return out;
}

}  // namespace motivic::ff
