#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/variety.hpp"

using namespace motivic;

namespace {

std::vector<BigInt> counts(const std::string& text, unsigned n) {
    const VarietyExpr x = parse_variety(text);
    std::vector<BigInt> out;
    for (unsigned m = 1; m <= n; ++m) out.push_back(point_count(x, m));
    return out;
}

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("variety") {
    TEST_CASE("formulas") {
        CHECK(point_count(parse_variety("A(2) over 3"), 1) == 9);
        CHECK(point_count(parse_variety("P(1) over 5"), 2) == 26);
        CHECK(counts("P(2) over 2", 3) == big({7, 21, 73}));
        CHECK(counts("T(2) over 4", 2) == big({9, 225}));
        CHECK(counts("point over 7", 2) == big({1, 1}));
        CHECK(counts("product(P(1), T(1)) over 3", 2) == big({8, 80}));
        CHECK(counts("union(P(1), A(1), point) over 2", 2) == big({6, 10}));
    }

    TEST_CASE("projective cell decomposition") {
        for (std::uint64_t q : {2, 3, 5, 7}) {
            for (unsigned n = 0; n <= 4; ++n) {
                for (unsigned m = 1; m <= 3; ++m) {
                    BigInt cells = 0;
                    for (unsigned i = 0; i <= n; ++i) cells += point_count(VarietyExpr::affine(i, q), m);
                    CHECK(point_count(VarietyExpr::projective(n, q), m) == cells);
                }
            }
        }
    }

    TEST_CASE("curves from brute-force oracle") {
        // tests/oracles/curve_counts.py
        CHECK(counts("affine over 2 vars x,y : y^2 + y + x^3", 6) == big({2, 8, 8, 8, 32, 80}));
        CHECK(counts("proj over 2 vars x,y,z : y^2*z + y*z^2 + x^3", 6) == big({3, 9, 9, 9, 33, 81}));
        CHECK(counts("affine over 3 vars x,y : y^2 - x^3 - x^2 - 1", 6) == big({5, 11, 17, 95, 245, 683}));
        CHECK(counts("proj over 3 vars x,y,z : y^2*z - x^3 - x^2*z - z^3", 6) == big({6, 12, 18, 96, 246, 684}));
    }

    TEST_CASE("concrete unions and products match formulas") {
        const auto line = "affine over 3 vars x,y : y";
        CHECK(counts(std::string("product(") + line + ", " + line + ")", 2) == counts("A(2) over 3", 2));
        CHECK(counts("union(affine vars x,y : x*y, point) over 3", 2) == big({6, 18}));
        CHECK(counts("proj over 5 vars x,y,z : x*y - z^2", 3) == counts("P(1) over 5", 3));
    }

    TEST_CASE("validate_closed") {
        const auto acc = [](const char* a, const char* c) {
            return validate_closed(parse_variety(a, 3), parse_variety(c, 3)).accepted;
        };
        CHECK(acc("P(2)", "proj vars x,y,z : z"));
        CHECK(acc("affine vars x,y : x*y", "affine vars x,y : x*y ; x"));
        CHECK(acc("A(2)", "point"));
        CHECK(acc("union(P(1), A(1))", "union(point, point)"));
        CHECK(acc("union(P(1), A(1))", "A(1)"));
        CHECK(acc("T(1)", "T(1)"));
        const ClosedCheck r = validate_closed(parse_variety("A(1)", 3), parse_variety("T(1)", 3));
        CHECK_FALSE(r.accepted);
        CHECK(r.reason == "not a supported closed-inclusion pattern");
        CHECK_FALSE(acc("A(2)", "proj vars x,y,z : z"));
        CHECK_FALSE(acc("affine vars x,y : x*y", "affine vars x,y : x"));
        CHECK_FALSE(acc("P(2)", "A(2)"));
    }

    TEST_CASE("complement counts and errors") {
        CHECK(counts("complement(P(2), proj vars x,y,z : z) over 3", 3) == counts("A(2) over 3", 3));
        CHECK(counts("complement(A(1), point) over 5", 2) == counts("T(1) over 5", 2));
        try {
            point_count(parse_variety("complement(A(1), T(1)) over 2"), 1);
            FAIL("expected InvalidComplement");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidComplement);
        }
    }

    TEST_CASE("closed point profile") {
        CHECK(closed_point_profile(parse_variety("A(1) over 2"), 4) == big({2, 1, 2, 3}));
        CHECK(closed_point_profile(parse_variety("point over 5"), 4) == big({1, 0, 0, 0}));
        CHECK(closed_point_profile(parse_variety("P(1) over 2"), 3) == big({3, 1, 2}));
        // sum_{d | m} d a_d = N_m
        const VarietyExpr e = parse_variety("proj over 3 vars x,y,z : y^2*z - x^3 - x^2*z - z^3");
        const auto a = closed_point_profile(e, 8);
        for (unsigned m = 1; m <= 8; ++m) {
            BigInt s = 0;
            for (unsigned d = 1; d <= m; ++d)
                if (m % d == 0) s += a[d - 1] * d;
            CHECK(s == point_count(e, m));
        }
        const std::vector<BigInt> bad = big({1, 2});
        CHECK_THROWS_AS(profile_from_counts(bad), Error);
    }

    TEST_CASE("budget") {
        CountOptions tiny;
        tiny.budget = 10;
        try {
            point_count(parse_variety("affine over 5 vars x,y,z : x*y*z - 1"), 2, tiny);
            FAIL("expected BudgetExceeded");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BudgetExceeded);
        }
    }
}
