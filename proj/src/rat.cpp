#include "motivic/rat.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "motivic/error.hpp"

namespace motivic {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(std::vector<BigInt>& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// Exact elimination of rows * x = rhs; free variables are set to 0.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                                           std::size_t cols) {
    const std::size_t nrows = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && rows[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < nrows; ++i) {
        if (rhs[i] != 0) return std::nullopt;
    }
    std::vector<Rational> x(cols, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

QPoly to_qpoly(const std::vector<BigInt>& a) {
    QPoly r(a.begin(), a.end());
    trim(r);
    return r;
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::string format_poly_t(const std::vector<BigInt>& a) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        BigInt c = a[i];
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0) {
            out << "-";
            c = abs(c);
        }
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

std::optional<Recurrence> min_recurrence(std::span<const BigInt> seq, std::size_t max_order) {
    const std::size_t d = seq.size();
    if (d < 2 * max_order + 2) {
        throw Error(ErrorCode::InsufficientData, "need at least " + std::to_string(2 * max_order + 2) + " terms, got " +
                                                     std::to_string(d));
    }
    for (std::size_t k = 0; k <= max_order; ++k) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t m = k; m < d; ++m) {
            std::vector<Rational> row(k);
            for (std::size_t j = 1; j <= k; ++j) row[j - 1] = seq[m - j];
            rows.push_back(std::move(row));
            rhs.emplace_back(seq[m]);
        }
        if (auto x = solve(std::move(rows), std::move(rhs), k)) return Recurrence{k, std::move(*x)};
    }
    return std::nullopt;
}

std::vector<BigInt> expand(const RationalFn& f, std::size_t terms) {
    // s * den = num, den[0] = 1
    std::vector<BigInt> s(terms, 0);
    for (std::size_t k = 0; k < terms; ++k) {
        BigInt v = k < f.numerator.size() ? f.numerator[k] : BigInt(0);
        for (std::size_t j = 1; j < f.denominator.size() && j <= k; ++j) v -= f.denominator[j] * s[k - j];
        s[k] = v;
    }
    return s;
}

bool equivalent(const RationalFn& a, const RationalFn& b) {
    return mul(a.numerator, b.denominator) == mul(b.numerator, a.denominator);
}

RationalFn from_linear_factors(std::span<const std::pair<BigInt, long>> factors) {
    RationalFn f;
    for (const auto& [root, e] : factors) {
        const std::vector<BigInt> lin{1, -root};
        for (long i = 0; i < std::labs(e); ++i) {
            if (e > 0) {
                f.numerator = mul(f.numerator, lin);
            } else {
                f.denominator = mul(f.denominator, lin);
            }
        }
    }
    // cancel common factors exactly
    QPoly g = qpoly_gcd(to_qpoly(f.numerator), to_qpoly(f.denominator));
    if (g.size() > 1) {
        auto divide = [&](const std::vector<BigInt>& a) {
            QPoly num = to_qpoly(a), quot(num.size() - g.size() + 1, 0);
            while (num.size() >= g.size()) {
                const Rational c = num.back() / g.back();
                const std::size_t shift = num.size() - g.size();
                quot[shift] = c;
                for (std::size_t i = 0; i < g.size(); ++i) num[shift + i] -= c * g[i];
                trim(num);
            }
            const Rational c0 = quot[0];
            std::vector<BigInt> out;
            for (auto& c : quot) {
                Rational v = c / c0;
                out.push_back(v.get_num());
            }
            trim(out);
            return out;
        };
        f.numerator = divide(f.numerator);
        f.denominator = divide(f.denominator);
    }
    return f;
}

RationalFn to_rational(const WittVector& w, std::size_t max_degree) {
    const std::size_t n = w.precision();
    if (n < 2 * max_degree + 2) {
        throw Error(ErrorCode::InsufficientData, "precision " + std::to_string(n) + " below 2 * max-degree + 2 = " +
                                                     std::to_string(2 * max_degree + 2));
    }
    std::vector<BigInt> s{1};
    s.insert(s.end(), w.coeffs().begin(), w.coeffs().end());
    for (std::size_t e = 0; e <= max_degree; ++e) {
        // s_k + sum_{j=1..e} Q_j s_{k-j} = 0 for k = max_degree+1 .. n
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t k = max_degree + 1; k <= n; ++k) {
            std::vector<Rational> row(e);
            for (std::size_t j = 1; j <= e; ++j) row[j - 1] = s[k - j];
            rows.push_back(std::move(row));
            rhs.emplace_back(-s[k]);
        }
        auto x = solve(std::move(rows), std::move(rhs), e);
        if (!x) continue;
        QPoly den{1};
        den.insert(den.end(), x->begin(), x->end());
        trim(den);
        QPoly num(max_degree + 1, 0);
        for (std::size_t k = 0; k <= max_degree; ++k)
            for (std::size_t j = 0; j < den.size() && j <= k; ++j) num[k] += den[j] * s[k - j];
        trim(num);
        if (num.empty()) throw Error(ErrorCode::Internal, "zero numerator");
        QPoly g = qpoly_gcd(num, den);
        if (g.size() > 1) throw Error(ErrorCode::Internal, "reconstructed fraction is not reduced");
        RationalFn out;
        out.numerator.clear();
        out.denominator.clear();
        for (const auto& c : num) {
            if (c.get_den() != 1) throw Error(ErrorCode::NonIntegralCoefficients, "numerator coefficient " + c.get_str());
            out.numerator.push_back(c.get_num());
        }
        for (const auto& c : den) {
            if (c.get_den() != 1) {
                throw Error(ErrorCode::NonIntegralCoefficients, "denominator coefficient " + c.get_str());
            }
            out.denominator.push_back(c.get_num());
        }
        return out;
    }
    throw Error(ErrorCode::NoRationalForm,
                "no rational function of degree <= " + std::to_string(max_degree) + " matches the series");
}

WeilReport weil_validate(const RationalFn& f, std::uint64_t q) {
    WeilReport rep;
    const BigInt qb(static_cast<unsigned long>(q));
    const std::vector<BigInt> expected_den{1, -(qb + 1), qb};
    rep.denominator_ok = f.denominator == expected_den;
    if (!rep.denominator_ok) rep.failures.push_back("denominator is not (1 - t)(1 - qt)");

    std::vector<BigInt> b = f.numerator;
    trim(b);
    const std::size_t deg = b.size() - 1;
    rep.even_degree = deg % 2 == 0;
    if (!rep.even_degree) {
        rep.failures.push_back("numerator degree " + std::to_string(deg) + " is odd");
        return rep;
    }
    const std::size_t g = deg / 2;
    rep.genus = g;

    rep.symmetric = true;
    for (std::size_t i = 0; i <= g; ++i) {
        if (b[i] * pow_big(qb, static_cast<unsigned long>(g - i)) != b[2 * g - i]) {
            rep.symmetric = false;
            rep.failures.push_back("functional equation fails at b_" + std::to_string(i));
            break;
        }
    }

    // Reciprocal roots: roots of z^(2g) + b_1 z^(2g-1) + ... + b_2g.
    using C = std::complex<long double>;
    const long double target = std::sqrt(static_cast<long double>(q));
    rep.riemann = true;
    if (g > 0) {
        std::vector<C> coef(deg + 1);  // monic, descending powers
        for (std::size_t i = 0; i <= deg; ++i) coef[i] = C(static_cast<long double>(b[i].get_d()), 0);
        auto eval = [&](C z) {
            C v = 0;
            for (const auto& c : coef) v = v * z + c;
            return v;
        };
        auto deriv = [&](C z) {
            C v = 0;
            for (std::size_t i = 0; i < deg; ++i) v = v * z + coef[i] * static_cast<long double>(deg - i);
            return v;
        };
        std::vector<C> z(deg);
        const C seed(0.4L, 0.9L);
        C cur = target;
        for (auto& zi : z) {
            zi = cur;
            cur *= seed;
        }
        for (int iter = 0; iter < 2000; ++iter) {
            long double change = 0;
            for (std::size_t i = 0; i < deg; ++i) {
                C denom = 1;
                for (std::size_t j = 0; j < deg; ++j)
                    if (j != i) denom *= z[i] - z[j];
                const C step = eval(z[i]) / denom;
                z[i] -= step;
                change = std::max(change, std::abs(step));
            }
            if (change < 1e-30L) break;
        }
        for (auto& zi : z) {
            for (int k = 0; k < 5; ++k) {
                const C d = deriv(zi);
                if (std::abs(d) == 0) break;
                zi -= eval(zi) / d;
            }
            rep.root_abs.push_back(std::abs(zi));
            if (std::fabs(std::abs(zi) - target) > kRiemannTolerance) rep.riemann = false;
        }
        if (!rep.riemann) rep.failures.push_back("a reciprocal root has |alpha| != sqrt(q)");
    }
    rep.passed = rep.denominator_ok && rep.even_degree && rep.symmetric && rep.riemann;
    return rep;
}

std::string format_rational_fn(const RationalFn& f) {
    return "(" + format_poly_t(f.numerator) + ")/(" + format_poly_t(f.denominator) + ")";
}

}  // namespace motivic
