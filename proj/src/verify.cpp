#include "motivic/verify.hpp"

#include <random>
#include <sstream>

#include "motivic/error.hpp"
#include "motivic/h2.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/k0.hpp"
#include "motivic/oracle.hpp"
#include "motivic/rat.hpp"
#include "motivic/witt.hpp"

namespace motivic {

namespace {

const std::string kE2 = "proj vars x,y,z : y^2*z + y*z^2 + x^3";
const std::string kE2Affine = "affine vars x,y : y^2 + y + x^3";
const std::string kC3 = "proj vars x,y,z : y^2*z - x^3 - x^2*z - z^3";
const std::string kC3Affine = "affine vars x,y : y^2 - x^3 - x^2 - 1";

std::string join(const std::vector<BigInt>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "]";
}

std::vector<BigInt> counts_upto(const VarietyExpr& x, unsigned n, const CountOptions& opts) {
    std::vector<BigInt> out;
    for (unsigned m = 1; m <= n; ++m) out.push_back(point_count(x, m, opts));
    return out;
}

const std::vector<std::string>& catalog_texts() {
    static const std::vector<std::string> v = {"point", "A(1)", "A(2)", "P(1)", "P(2)", "T(1)", "product(P(1),P(1))"};
    return v;
}

std::vector<std::uint64_t> odd_prime_powers_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 3; q < bound; q += 2)
        if (prime_power_base(q) != 0) out.push_back(q);
    return out;
}

VarietyExpr parse_at(const std::string& text, std::uint64_t q) { return parse_variety(text, q); }

}  // namespace

void SuiteReport::add(std::string name, bool ok, std::string detail) {
    if (!ok) passed = false;
    cases.push_back({std::move(name), ok, std::move(detail)});
}

std::size_t SuiteReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.passed ? 0 : 1;
    return n;
}

const std::vector<ScissorPair>& scissor_corpus() {
    static const std::vector<ScissorPair> corpus = {
        {2, "P(2)", "proj vars x,y,z : z", "A(2)"},
        {2, "P(1)", "point", "A(1)"},
        {2, "A(2)", "affine vars x,y : x*y", "T(2)"},
        {2, kE2, kE2 + " ; z", kE2Affine},
        {2, "P(2)", kE2, std::nullopt},
        {2, "union(P(1),A(2))", "P(1)", "A(2)"},
        {2, "A(1)", "point", "T(1)"},
        {2, "A(3)", "affine vars x,y,z : x ; y", "union(product(A(2),T(1)),product(A(1),T(1)))"},
        {3, "P(1)", "point", "A(1)"},
        {3, "A(2)", "affine vars x,y : y - x^2", "product(A(1),T(1))"},
        {3, kC3Affine, kC3Affine + " ; x", std::nullopt},
        {3, "union(point,point,A(1))", "union(point,point,point)", "T(1)"},
        {3, "A(3)", "affine vars x,y,z : z", "product(A(2),T(1))"},
        {3, kC3, kC3 + " ; z", kC3Affine},
        {5, "A(1)", "affine vars x : x", "T(1)"},
        {5, "A(1)", "affine vars x : x^2 - 2", std::nullopt},
        {5, "P(1)", "proj vars x,y : x*y", "T(1)"},
        {5, "union(T(1),P(2))", "P(2)", "T(1)"},
        {5, "P(3)", "point", "union(A(3),A(2),A(1))"},
        {7, "A(1)", "affine vars x : x^3 - 2", std::nullopt},
        {7, "P(2)", "proj vars x,y,z : x", "A(2)"},
        {7, "A(2)", "point", std::nullopt},
        {7, "union(A(1),A(1))", "union(point,affine vars x : x^2 + 1)", std::nullopt},
        {7, "affine vars x : x^7 - x", "affine vars x : x^7 - x ; x",
         "union(point,point,point,point,point,point)"},
    };
    return corpus;
}

SuiteReport run_scissor_suite(const SuiteOptions& opts, unsigned m_max, std::size_t precision) {
    SuiteReport rep;
    rep.suite = "scissor";
    for (const auto& pair : scissor_corpus()) {
        const std::string name = "(" + pair.ambient + ", " + pair.closed + ") over " + std::to_string(pair.q);
        try {
            const VarietyExpr ambient = parse_at(pair.ambient, pair.q);
            const VarietyExpr closed = parse_at(pair.closed, pair.q);
            const ScissorReport r = verify_scissor(ambient, closed, m_max, precision, opts.count);
            if (!r.passed) {
                rep.add(name, false, r.failure);
                continue;
            }
            if (pair.complement) {
                const auto expected = counts_upto(parse_at(*pair.complement, pair.q), m_max, opts.count);
                const std::vector<BigInt> got(r.complement_counts.begin(), r.complement_counts.begin() + m_max);
                if (expected != got) {
                    rep.add(name, false, "complement counts " + join(got) + " but " + *pair.complement + " has " +
                                             join(expected));
                    continue;
                }
            }
            rep.add(name, true, "ambient " + join(r.ambient_counts));
        } catch (const Error& e) {
            rep.add(name, false, std::string(error_code_name(e.code())) + ": " + e.what());
        }
    }
    return rep;
}

SuiteReport run_witt_ring_suite(const SuiteOptions& opts, std::size_t pairs, std::size_t precision) {
    SuiteReport rep;
    rep.suite = "witt-ring";
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    auto random_witt = [&] {
        std::vector<BigInt> c(precision);
        for (auto& x : c) x = coeff(rng);
        return WittVector(std::move(c));
    };
    std::size_t bad_add = 0, bad_mul = 0, bad_inv = 0, bad_sub = 0, bad_dist = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const WittVector a = random_witt(), b = random_witt();
        const GhostSeq ga = ghost(a), gb = ghost(b);
        const GhostSeq gs = ghost(witt_add(a, b)), gp = ghost(witt_mul(a, b));
        for (std::size_t k = 0; k < precision; ++k) {
            if (gs[k] != ga[k] + gb[k]) {
                ++bad_add;
                break;
            }
        }
        for (std::size_t k = 0; k < precision; ++k) {
            if (gp[k] != ga[k] * gb[k]) {
                ++bad_mul;
                break;
            }
        }
        if (!(ghost_inverse(ga) == a)) ++bad_inv;
        if (!(witt_sub(witt_add(a, b), b) == a)) ++bad_sub;
        if (i < 50) {
            const WittVector c = random_witt();
            if (!(witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c)))) ++bad_dist;
        }
    }
    const std::string n = std::to_string(pairs);
    rep.add("ghost additive on " + n + " pairs", bad_add == 0, std::to_string(bad_add) + " failures");
    rep.add("ghost multiplicative on " + n + " pairs", bad_mul == 0, std::to_string(bad_mul) + " failures");
    rep.add("ghost_inverse after ghost is the identity", bad_inv == 0, std::to_string(bad_inv) + " failures");
    rep.add("(a + b) - b = a", bad_sub == 0, std::to_string(bad_sub) + " failures");
    rep.add("distributivity on 50 triples", bad_dist == 0, std::to_string(bad_dist) + " failures");

    std::size_t bad_teich = 0;
    std::string first;
    for (long m = -20; m <= 20; ++m) {
        for (long n2 = -20; n2 <= 20; ++n2) {
            if (!(witt_mul(teichmuller(m, 10), teichmuller(n2, 10)) == teichmuller(BigInt(m * n2), 10))) {
                if (bad_teich++ == 0) first = "m = " + std::to_string(m) + ", n = " + std::to_string(n2);
            }
        }
    }
    rep.add("teichmuller multiplicative, |m|,|n| <= 20", bad_teich == 0, first);
    return rep;
}

SuiteReport run_lefschetz_suite(const SuiteOptions& opts, unsigned m_max) {
    SuiteReport rep;
    rep.suite = "lefschetz";
    std::vector<std::string> spaces = catalog_texts();
    spaces.insert(spaces.end(), {"T(2)", "P(3)", "union(P(1),T(1))", "product(A(1),T(1))"});
    for (std::uint64_t q : {3, 5, 7, 9}) {
        for (const auto& s : spaces) {
            const std::string name = s + " over " + std::to_string(q);
            const VarietyExpr x = parse_at(s, q);
            (void)opts;
            const LefschetzReport r = lefschetz_check(x, m_max);
            rep.add(name, r.passed,
                    r.passed ? std::string{}
                             : "m = " + std::to_string(r.failed_m) + ": trace " + r.trace.get_str() + ", count " +
                                   r.count.get_str());
        }
    }
    return rep;
}

SuiteReport run_hilbert_oracle_suite(const SuiteOptions& opts, std::size_t random_rationals) {
    SuiteReport rep;
    rep.suite = "hilbert-oracle";
    const long reps[] = {1, -1, 2, -2, 5, -5, 10, -10};
    std::size_t disagree = 0;
    std::string first;
    for (long a : reps) {
        for (long b : reps) {
            const int f = hilbert2(a, b), o = oracle::hilbert2_mod256(a, b);
            if (f != o && disagree++ == 0) {
                first = "(" + std::to_string(a) + ", " + std::to_string(b) + "): formula " + std::to_string(f) +
                        ", oracle " + std::to_string(o);
            }
        }
    }
    rep.add("formula matches mod 2^8 oracle on 64 square-class pairs", disagree == 0, first);

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    std::size_t bad_neg = 0, bad_one = 0, bad_odd = 0;
    for (std::size_t i = 0; i < random_rationals; ++i) {
        Rational a;
        do {
            a = make_rational(num(rng), den(rng));
        } while (a == 0 || a == 1);
        if (hilbert2(a, -a) != 0) ++bad_neg;
        if (hilbert2(a, Rational(1 - a)) != 0) ++bad_one;
        for (std::uint64_t p : {3, 5, 7})
            if (hilbert_odd(a, -a, p) != 0 || hilbert_odd(a, Rational(1 - a), p) != 0) ++bad_odd;
    }
    const std::string n = std::to_string(random_rationals);
    rep.add("(a, -a)_2 = 0 on " + n + " rationals", bad_neg == 0, std::to_string(bad_neg) + " failures");
    rep.add("(a, 1 - a)_2 = 0 on " + n + " rationals", bad_one == 0, std::to_string(bad_one) + " failures");
    rep.add("odd-prime Steinberg relations", bad_odd == 0, std::to_string(bad_odd) + " failures");
    return rep;
}

SuiteReport run_zeta_square_suite(const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = "zeta-square";
    for (std::uint64_t q : {3, 5, 7, 9}) {
        for (const auto& s : catalog_texts()) {
            const std::string name = s + " over " + std::to_string(q);
            try {
                const VarietyExpr x = parse_at(s, q);
                const RationalFn from_counts = to_rational(from_pointcounts(counts_upto(x, 10, opts.count)), 4);
                const RationalFn from_catalog = catalog_zeta(x);
                rep.add(name, from_counts == from_catalog,
                        format_rational_fn(from_counts) + " vs " + format_rational_fn(from_catalog));
            } catch (const Error& e) {
                rep.add(name, false, std::string(error_code_name(e.code())) + ": " + e.what());
            }
        }
    }
    return rep;
}

SuiteReport run_euler_suite(const SuiteOptions& opts, std::size_t precision) {
    SuiteReport rep;
    rep.suite = "euler-product";
    const auto n = static_cast<unsigned>(precision);
    for (std::uint64_t q : {2, 3}) {
        std::vector<std::string> spaces = catalog_texts();
        spaces.push_back(q == 2 ? kE2 : kC3);
        for (const auto& s : spaces) {
            const std::string name = s + " over " + std::to_string(q);
            try {
                const VarietyExpr x = parse_at(s, q);
                const WittVector lhs = euler_product(closed_point_profile(x, n, opts.count), precision);
                const WittVector rhs = measure_zeta(K0Class::of(x), precision, opts.count);
                rep.add(name, lhs == rhs);
            } catch (const Error& e) {
                rep.add(name, false, std::string(error_code_name(e.code())) + ": " + e.what());
            }
        }
    }
    return rep;
}

SuiteReport run_curve_suite(const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = "curves";
    struct Curve {
        std::string text;
        std::uint64_t q;
        RationalFn expected;
    };
    const Curve curves[] = {
        {kE2, 2, RationalFn{{1, 0, 2}, {1, -3, 2}}},
        {kC3, 3, RationalFn{{1, 2, 3}, {1, -4, 3}}},
    };
    for (const auto& c : curves) {
        const std::string name = c.text + " over " + std::to_string(c.q);
        try {
            const VarietyExpr x = parse_at(c.text, c.q);
            const RationalFn f = to_rational(from_pointcounts(counts_upto(x, 6, opts.count)), 2);
            rep.add(name + ": rational zeta", f == c.expected, format_rational_fn(f));
            const WeilReport w = weil_validate(f, c.q);
            std::ostringstream roots;
            roots.precision(15);
            for (long double r : w.root_abs) roots << static_cast<double>(r) << ' ';
            rep.add(name + ": Weil checks", w.passed, "|roots| " + roots.str());
        } catch (const Error& e) {
            rep.add(name, false, std::string(error_code_name(e.code())) + ": " + e.what());
        }
    }
    return rep;
}

SuiteReport run_h2_table_suite(const SuiteOptions&) {
    SuiteReport rep;
    rep.suite = "h2-table";
    std::size_t bad_points = 0, bad_lines = 0;
    std::string first;
    for (std::uint64_t q : odd_prime_powers_below(200)) {
        const auto pts = parse_scenario("\"union(point,point)\" swap=(1 2) galois=frob q=" + std::to_string(q));
        const auto lines = parse_scenario("\"union(P(1),P(1))\" swap=(1 2) galois=frob q=" + std::to_string(q));
        if (h2_eval(pts) != 0) ++bad_points;
        if (h2_eval(lines) != (q % 4 == 3 ? 1 : 0) && bad_lines++ == 0) first = "q = " + std::to_string(q);
    }
    rep.add("two points, swap, Frobenius: 0 for odd q < 200", bad_points == 0, std::to_string(bad_points) + " failures");
    rep.add("P1 + P1, swap, Frobenius: 1 iff q = 3 mod 4", bad_lines == 0, first);
    const int conj = h2_eval(parse_scenario("\"union(P(1),P(1))\" swap=(1 2) galois=conj"));
    rep.add("P1 + P1, swap, conjugation: 1", conj == 1, "value " + std::to_string(conj));
    return rep;
}

SuiteReport run_odd_blind_suite(const SuiteOptions&) {
    SuiteReport rep;
    rep.suite = "odd-blind";
    for (std::uint64_t p : {3, 5, 7}) {
        std::size_t bad = 0, tried = 0;
        for (std::uint64_t q : odd_prime_powers_below(200)) {
            if (q % p == 0) continue;
            for (const char* space : {"union(point,point)", "union(P(1),P(1))"}) {
                ++tried;
                const std::string text = std::string("\"") + space + "\" swap=(1 2) galois=frob q=" + std::to_string(q);
                if (h_odd_eval(parse_scenario(text), p) != 0) ++bad;
            }
        }
        if (h_odd_eval(parse_scenario("\"union(P(1),P(1))\" swap=(1 2) galois=conj"), p) != 0) ++bad;
        ++tried;
        rep.add("p = " + std::to_string(p) + ": all " + std::to_string(tried) + " scenarios give 0", bad == 0,
                std::to_string(bad) + " nonzero");
    }
    return rep;
}

std::vector<std::string> suite_names() {
    return {"scissor", "witt-ring", "lefschetz", "hilbert-oracle", "zeta-square",
            "euler-product", "curves", "h2-table", "odd-blind"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "scissor") return run_scissor_suite(opts);
    if (name == "witt-ring") return run_witt_ring_suite(opts);
    if (name == "lefschetz") return run_lefschetz_suite(opts);
    if (name == "hilbert-oracle") return run_hilbert_oracle_suite(opts);
    if (name == "zeta-square") return run_zeta_square_suite(opts);
    if (name == "euler-product") return run_euler_suite(opts);
    if (name == "curves") return run_curve_suite(opts);
    if (name == "h2-table") return run_h2_table_suite(opts);
    if (name == "odd-blind") return run_odd_blind_suite(opts);
    throw Error(ErrorCode::ValidationError, "unknown suite '" + name + "'");
}

}  // namespace motivic
