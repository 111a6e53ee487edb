#include <doctest.h>

#include <random>

#include "motivic/error.hpp"
#include "motivic/k0.hpp"

using namespace motivic;

namespace {

K0Class cls(const char* text, std::uint64_t q, long c = 1) { return K0Class::of(parse_variety(text, q), c); }

}  // namespace

TEST_SUITE("k0") {
    TEST_CASE("arithmetic") {
        const K0Class sum = k0_add(cls("A(1)", 3), cls("point", 3));
        for (unsigned m = 1; m <= 4; ++m) CHECK(measure_counts(sum, m) == pow_big(3, m) + 1);
        const K0Class sq = k0_mul(cls("P(1)", 3), cls("P(1)", 3));
        REQUIRE(sq.terms().size() == 1);
        CHECK(sq.terms().begin()->second.coeff == 1);
        CHECK(sq.terms().begin()->second.variety.kind() == VarietyExpr::Kind::Product);
        CHECK(measure_counts(k0_sub(cls("A(1)", 3), cls("point", 3)), 2) == 8);
        CHECK(k0_sub(sum, sum).is_zero());
        CHECK(measure_counts(K0Class(5), 3) == 0);
        CHECK(measure_counts(cls("P(2)", 2), 1) == 7);
        CHECK_THROWS_AS(k0_add(cls("A(1)", 3), cls("A(1)", 5)), Error);
    }

    TEST_CASE("canonical forms merge terms") {
        K0Class c(3);
        c.add_term(parse_variety("union(A(1), point)", 3), 1);
        c.add_term(parse_variety("union(point, A(1))", 3), 1);
        c.add_term(parse_variety("product(P(1), T(1))", 3), 2);
        c.add_term(parse_variety("product(T(1), P(1))", 3), -2);
        REQUIRE(c.terms().size() == 1);
        CHECK(c.terms().begin()->second.coeff == 2);
    }

    TEST_CASE("Lefschetz class") {
        const K0Class l = lefschetz(4);
        CHECK(measure_counts(l, 1) == 4);
        CHECK(measure_counts(k0_mul(l, l), 1) == 16);
        const GhostSeq g = ghost(measure_zeta(l, 4));
        CHECK(g == GhostSeq{4, 16, 64, 256});
        CHECK_THROWS_AS(lefschetz(6), Error);
    }

    TEST_CASE("measure zeta examples") {
        CHECK(measure_zeta(cls("point", 3), 4).coeffs() == std::vector<BigInt>{1, 1, 1, 1});
        CHECK(measure_zeta(cls("A(1)", 2), 4).coeffs() == std::vector<BigInt>{2, 4, 8, 16});
        CHECK(measure_zeta(cls("P(1)", 3), 3).coeffs() == std::vector<BigInt>{4, 13, 40});
    }

    TEST_CASE("scissor relation P1 = A1 + point") {
        for (std::uint64_t q : {2, 3, 5}) {
            const K0Class rel = k0_sub(k0_sub(cls("P(1)", q), cls("A(1)", q)), cls("point", q));
            for (unsigned m = 1; m <= 6; ++m) CHECK(measure_counts(rel, m) == 0);
            CHECK(measure_equal(cls("P(1)", q), k0_add(cls("A(1)", q), cls("point", q)), 6));
        }
        CHECK_FALSE(measure_equal(cls("P(1)", 3), cls("A(1)", 3), 3));
    }

    TEST_CASE("measures are additive and multiplicative on random classes") {
        std::mt19937_64 rng(3);
        const char* gens[] = {"point", "A(1)", "A(2)", "P(1)", "P(2)", "T(1)", "T(2)"};
        std::uniform_int_distribution<int> pick(0, 6), coeff(-3, 3), nterms(1, 3);
        for (std::uint64_t q : {2, 3, 4, 5}) {
            for (int trial = 0; trial < 10; ++trial) {
                auto rnd = [&] {
                    K0Class c(q);
                    for (int i = nterms(rng); i > 0; --i) c.add_term(parse_variety(gens[pick(rng)], q), coeff(rng));
                    return c;
                };
                const K0Class a = rnd(), b = rnd();
                for (unsigned m = 1; m <= 4; ++m) {
                    CHECK(measure_counts(k0_add(a, b), m) == measure_counts(a, m) + measure_counts(b, m));
                    CHECK(measure_counts(k0_mul(a, b), m) == measure_counts(a, m) * measure_counts(b, m));
                }
                CHECK(measure_zeta(k0_add(a, b), 6) == witt_add(measure_zeta(a, 6), measure_zeta(b, 6)));
                const GhostSeq ga = ghost(measure_zeta(a, 5)), gb = ghost(measure_zeta(b, 5));
                const GhostSeq gab = ghost(measure_zeta(k0_mul(a, b), 5));
                for (std::size_t i = 0; i < 5; ++i) CHECK(gab[i] == ga[i] * gb[i]);
            }
        }
    }

    TEST_CASE("verify_scissor") {
        CHECK(verify_scissor(parse_variety("P(1)", 3), parse_variety("point", 3), 6, 10).passed);
        const ScissorReport line = verify_scissor(parse_variety("P(2)", 2), parse_variety("proj vars x,y,z : z", 2), 3, 4);
        CHECK(line.passed);
        CHECK(line.closed_counts[0] == 3);
        CHECK(line.complement_counts[0] == 4);
        const ScissorReport gm = verify_scissor(parse_variety("A(1)", 5), parse_variety("affine vars x : x", 5), 4, 4);
        CHECK(gm.complement_counts == std::vector<BigInt>{4, 24, 124, 624});
        try {
            verify_scissor(parse_variety("A(1)", 5), parse_variety("T(1)", 5), 2, 2);
            FAIL("expected InvalidComplement");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidComplement);
        }
    }
}
