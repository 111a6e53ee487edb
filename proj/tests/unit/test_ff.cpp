#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/ff.hpp"

using namespace motivic;
using namespace motivic::ff;

namespace {

// exhaustive search for a monic factor of degree 1..deg/2
bool irreducible_by_division(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    auto divides = [&](const std::vector<std::uint64_t>& g) {
        std::vector<std::uint64_t> r = f;
        for (std::size_t i = r.size(); i-- >= g.size();) {
            const std::uint64_t c = r[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < g.size(); ++j) {
                std::size_t k = i - (g.size() - 1) + j;
                r[k] = (r[k] + p * p - c * g[j] % p) % p;
            }
            if (i == g.size() - 1) break;
        }
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (r[i] != 0) return false;
        return true;
    };
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<std::uint64_t> g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (divides(g)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("ff") {
    TEST_CASE("Rabin test agrees with trial division") {
        for (std::uint64_t p : {2, 3, 5}) {
            for (std::size_t n = 1; n <= 5; ++n) {
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < n; ++i) total *= p;
                if (total > 700) continue;
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    std::vector<std::uint64_t> f(n + 1, 0);
                    std::uint64_t v = idx;
                    for (std::size_t i = 0; i < n; ++i) {
                        f[i] = v % p;
                        v /= p;
                    }
                    f[n] = 1;
                    CHECK_MESSAGE(is_irreducible(f, p) == irreducible_by_division(f, p), "p=" << p << " idx=" << idx);
                }
            }
        }
    }

    TEST_CASE("least irreducible moduli") {
        auto mod = [](std::uint64_t p, unsigned n) {
            const FieldCtx k = build_extension(p, n);
            const auto m = k.modulus();
            return std::vector<std::uint32_t>(m.begin(), m.end());
        };
        CHECK(mod(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
        CHECK(mod(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(mod(2, 3) == std::vector<std::uint32_t>{1, 0, 1, 1});
        CHECK(mod(5, 2) == std::vector<std::uint32_t>{1, 1, 1});
        CHECK(mod(2, 4) == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
        CHECK(mod(3, 3) == std::vector<std::uint32_t>{1, 0, 2, 1});
    }

    TEST_CASE("field axioms for every field of size at most 81") {
        for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
                 {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
            const FieldCtx k = build_extension(p, n);
            const auto elems = enumerate_field(k);
            REQUIRE(elems.size() == k.size());
            for (std::size_t i = 0; i < elems.size(); ++i) CHECK(k.to_index(elems[i]) == i);
            for (const auto& a : elems) {
                CHECK(k.add(a, k.neg(a)).is_zero());
                CHECK(k.pow(a, k.size()) == a);
                if (!a.is_zero()) {
                    CHECK(k.mul(a, k.inv(a)) == k.one());
                    CHECK(k.pow(a, k.size() - 1) == k.one());
                }
                // Frobenius is additive and has order n
                FieldElem f = a;
                for (unsigned i = 0; i < n; ++i) f = k.frobenius(f);
                CHECK(f == a);
            }
            for (std::size_t i = 0; i < elems.size(); i += 3) {
                for (std::size_t j = 0; j < elems.size(); j += 5) {
                    const auto& a = elems[i];
                    const auto& b = elems[j];
                    const auto& c = elems[(i + j) % elems.size()];
                    CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
                    CHECK(k.mul(a, b) == k.mul(b, a));
                    CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
                    CHECK(k.sub(k.add(a, b), b) == a);
                }
            }
        }
    }

    TEST_CASE("multiplicative group is cyclic of order q - 1") {
        const FieldCtx k = build_extension(3, 3);
        std::size_t generators = 0;
        for (const auto& a : enumerate_field(k)) {
            if (a.is_zero()) continue;
            bool gen = true;
            for (std::uint64_t d : {2, 13})  // 26 = 2 * 13
                if (k.pow(a, 26 / d) == k.one()) gen = false;
            generators += gen ? 1 : 0;
        }
        CHECK(generators == 12);  // phi(26)
    }

    TEST_CASE("ff_op front end") {
        const FieldCtx k = build_extension(2, 2);
        const FieldElem x = k.gen();
        CHECK(ff_op(k, FieldOp::Mul, x, x) == k.add(x, k.one()));  // x^2 = x + 1
        CHECK(ff_op(k, FieldOp::Inv, x) == k.add(x, k.one()));
        CHECK(frobenius(k, x) == k.add(x, k.one()));
        CHECK(ff_pow(k, x, 3) == k.one());
        CHECK_THROWS_AS(ff_op(k, FieldOp::Add, x), Error);
    }

    TEST_CASE("errors") {
        auto code = [](auto f) {
            try {
                f();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::Internal;
        };
        CHECK(code([] { build_extension(4, 1); }) == ErrorCode::NotPrime);
        CHECK(code([] { build_extension(2, 0); }) == ErrorCode::DegreeOutOfRange);
        CHECK(code([] { build_extension(2, kMaxDegree + 1); }) == ErrorCode::DegreeOutOfRange);
        const FieldCtx k = build_extension(5, 1);
        CHECK(code([&] { k.inv(k.zero()); }) == ErrorCode::DivisionByZero);
        const FieldCtx other = build_extension(3, 1);
        CHECK(code([&] { k.add(k.one(), other.one()); }) == ErrorCode::ContextMismatch);
        CHECK(code([&] { enumerate_field(build_extension(2, 10), 100); }) == ErrorCode::BudgetExceeded);
    }
}
