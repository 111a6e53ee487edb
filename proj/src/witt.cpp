#include "motivic/witt.hpp"

#include <string>

#include "motivic/error.hpp"

namespace motivic {

namespace {

void require_same_precision(const WittVector& a, const WittVector& b) {
    if (a.precision() != b.precision()) {
        throw Error(ErrorCode::PrecisionMismatch, "precisions differ: " + std::to_string(a.precision()) + " vs " +
                                                      std::to_string(b.precision()));
    }
}

// Series with constant term 1; s[0] = 1.
std::vector<BigInt> as_series(const WittVector& w) {
    std::vector<BigInt> s{1};
    s.insert(s.end(), w.coeffs().begin(), w.coeffs().end());
    return s;
}

WittVector from_series(std::vector<BigInt> s) {
    s.erase(s.begin());
    return WittVector(std::move(s));
}

}  // namespace

WittVector::WittVector(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::ValidationError, "Witt vector precision must be >= 1");
}

WittVector WittVector::zero(std::size_t precision) { return WittVector(std::vector<BigInt>(precision, 0)); }

GhostSeq ghost(const WittVector& w) {
    const auto& a = w.coeffs();
    const std::size_t n = a.size();
    std::vector<BigInt> g(n);
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt v = BigInt(static_cast<unsigned long>(m)) * a[m - 1];
        for (std::size_t i = 1; i < m; ++i) v -= g[i - 1] * a[m - i - 1];
        g[m - 1] = v;
    }
    return GhostSeq(g.begin(), g.end());
}

std::vector<Rational> ghost_inverse_rational(std::span<const Rational> ghosts) {
    const std::size_t n = ghosts.size();
    std::vector<Rational> a(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational v = ghosts[m - 1];
        for (std::size_t i = 1; i < m; ++i) v += ghosts[i - 1] * a[m - i - 1];
        v /= static_cast<unsigned long>(m);
        a[m - 1] = v;
    }
    return a;
}

WittVector ghost_inverse(std::span<const Rational> ghosts) {
    if (ghosts.empty()) throw Error(ErrorCode::ValidationError, "empty ghost sequence");
    const auto a = ghost_inverse_rational(ghosts);
    std::vector<BigInt> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].get_den() != 1) {
            throw Error(ErrorCode::NonIntegralSeries,
                        "coefficient of t^" + std::to_string(i + 1) + " is " + a[i].get_str());
        }
        out.push_back(a[i].get_num());
    }
    return WittVector(std::move(out));
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
    require_same_precision(a, b);
    const auto sa = as_series(a), sb = as_series(b);
    const std::size_t n = sa.size();
    std::vector<BigInt> s(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (sa[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) s[i + j] += sa[i] * sb[j];
    }
    return from_series(std::move(s));
}

WittVector witt_neg(const WittVector& a) {
    const auto sa = as_series(a);
    const std::size_t n = sa.size();
    std::vector<BigInt> r(n, 0);
    r[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        BigInt v = 0;
        for (std::size_t i = 1; i <= k; ++i) v -= sa[i] * r[k - i];
        r[k] = v;
    }
    return from_series(std::move(r));
}

WittVector witt_sub(const WittVector& a, const WittVector& b) { return witt_add(a, witt_neg(b)); }

WittVector witt_mul(const WittVector& a, const WittVector& b) {
    require_same_precision(a, b);
    const GhostSeq ga = ghost(a), gb = ghost(b);
    GhostSeq g(ga.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = ga[i] * gb[i];
    try {
        return ghost_inverse(g);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonIntegralSeries) {
            throw Error(ErrorCode::NonIntegralSeries, std::string("Witt product left W(Z): ") + e.what());
        }
        throw;
    }
}

WittVector teichmuller(const BigInt& m, std::size_t precision) {
    std::vector<BigInt> c(precision);
    BigInt pw = 1;
    for (auto& x : c) {
        pw *= m;
        x = pw;
    }
    return WittVector(std::move(c));
}

WittVector from_pointcounts(std::span<const BigInt> counts) {
    GhostSeq g(counts.begin(), counts.end());
    return ghost_inverse(g);
}

WittVector euler_product(std::span<const BigInt> profile, std::size_t precision) {
    if (precision < 1 || precision > profile.size()) {
        throw Error(ErrorCode::ValidationError, "precision must lie in [1, profile length]");
    }
    std::vector<BigInt> s(precision + 1, 0);
    s[0] = 1;
    for (std::size_t d = 1; d <= precision; ++d) {
        const BigInt& a = profile[d - 1];
        if (a < 0) throw Error(ErrorCode::ValidationError, "closed-point counts must be nonnegative");
        if (a == 0) continue;
        // (1 - t^d)^(-a) = sum_k C(a + k - 1, k) t^(dk)
        std::vector<BigInt> factor(precision + 1, 0);
        BigInt binom = 1;
        for (std::size_t k = 0; k * d <= precision; ++k) {
            if (k > 0) {
                binom *= a + static_cast<unsigned long>(k) - 1;
                binom /= static_cast<unsigned long>(k);
            }
            factor[k * d] = binom;
        }
        std::vector<BigInt> next(precision + 1, 0);
        for (std::size_t i = 0; i <= precision; ++i) {
            if (s[i] == 0) continue;
            for (std::size_t j = 0; i + j <= precision; j += d) next[i + j] += s[i] * factor[j];
        }
        s = std::move(next);
    }
    return from_series(std::move(s));
}

}  // namespace motivic
