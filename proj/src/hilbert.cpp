#include "motivic/hilbert.hpp"

#include <string>

#include "motivic/error.hpp"

namespace motivic {

namespace {

void require_nonzero(const Rational& v) {
    if (v == 0) throw Error(ErrorCode::ZeroInput, "Hilbert symbol argument is zero");
}

long remove_factor(BigInt& v, unsigned long p) {
    long k = 0;
    while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        v /= p;
        ++k;
    }
    return k;
}

// Residue of a unit fraction modulo n (n coprime to the denominator).
unsigned long unit_residue(const Rational& u, unsigned long n) {
    BigInt num = u.get_num() % static_cast<long>(n);
    if (num < 0) num += n;
    BigInt den = u.get_den() % static_cast<long>(n);
    BigInt inv;
    const BigInt mod(n);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    BigInt r = (num * inv) % mod;
    return r.get_ui();
}

int long_mod2(long e) { return static_cast<int>(((e % 2) + 2) % 2); }

}  // namespace

UnitDecomp decompose(const Rational& value, std::uint64_t p) {
    require_nonzero(value);
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    BigInt num = value.get_num(), den = value.get_den();
    const long a = remove_factor(num, p) - remove_factor(den, p);
    return UnitDecomp{value, p, a, make_rational(num, den)};
}

int hilbert2(const Rational& a, const Rational& b) {
    require_nonzero(a);
    require_nonzero(b);
    const UnitDecomp da = decompose(a, 2), db = decompose(b, 2);
    const unsigned long u = unit_residue(da.unit, 8), v = unit_residue(db.unit, 8);
    auto eps = [](unsigned long r) { return static_cast<int>(((r - 1) / 2) % 2); };
    auto omega = [](unsigned long r) { return static_cast<int>(((r * r - 1) / 8) % 2); };
    const int e = eps(u) * eps(v) + long_mod2(da.alpha) * omega(v) + long_mod2(db.alpha) * omega(u);
    return e % 2;
}

int hilbert_odd(const Rational& a, const Rational& b, std::uint64_t p) {
    require_nonzero(a);
    require_nonzero(b);
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
    const UnitDecomp da = decompose(a, p), db = decompose(b, p);
    auto chi = [p](const Rational& unit) {
        // Euler's criterion: 0 for residues, 1 for non-residues.
        const BigInt r(static_cast<unsigned long>(unit_residue(unit, p)));
        BigInt e;
        const BigInt mod(static_cast<unsigned long>(p));
        mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
        return e == 1 ? 0 : 1;
    };
    const int eps_p = static_cast<int>(((p - 1) / 2) % 2);
    const int alpha = long_mod2(da.alpha), beta = long_mod2(db.alpha);
    return (alpha * beta * eps_p + beta * chi(da.unit) + alpha * chi(db.unit)) % 2;
}

SteinbergProduct sigma2(const CommutingPair& pair, bool drop_trivial) {
    SteinbergProduct out;
    for (const auto& s : pair.summands) {
        if (s.lambda == 0 || s.mu == 0) throw Error(ErrorCode::ZeroInput, "eigenvalues must be nonzero");
        if (drop_trivial && (s.lambda == 1 || s.mu == 1)) continue;
        out.factors.push_back({1 / s.lambda, s.mu, s.multiplicity});
    }
    return out;
}

int moore_h2(const SteinbergProduct& s) {
    int total = 0;
    for (const auto& f : s.factors) total += long_mod2(f.exponent) * hilbert2(f.a, f.b);
    return total % 2;
}

int moore_odd(const SteinbergProduct& s, std::uint64_t p) {
    int total = 0;
    for (const auto& f : s.factors) total += long_mod2(f.exponent) * hilbert_odd(f.a, f.b, p);
    return total % 2;
}

}  // namespace motivic
