#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/oracle.hpp"

using namespace motivic;

TEST_SUITE("hilbert") {
    TEST_CASE("decompose") {
        const UnitDecomp a = decompose(12, 2);
        CHECK(a.alpha == 2);
        CHECK(a.unit == 3);
        const UnitDecomp b = decompose(Rational(-5, 6), 2);
        CHECK(b.alpha == -1);
        CHECK(b.unit == Rational(-5, 3));
        CHECK(decompose(7, 2).alpha == 0);
        CHECK_THROWS_AS(decompose(0, 2), Error);
        CHECK_THROWS_AS(decompose(3, 4), Error);
    }

    TEST_CASE("2-adic symbol values") {
        CHECK(hilbert2(-1, 3) == 1);
        CHECK(hilbert2(-1, 7) == 1);
        CHECK(hilbert2(-1, 5) == 0);
        CHECK(hilbert2(-1, 1) == 0);
        CHECK(hilbert2(-1, -1) == 1);
        CHECK(hilbert2(2, 3) == 1);
        CHECK(hilbert2(2, 7) == 0);
        CHECK(hilbert2(Rational(1, 2), 5) == 1);
    }

    TEST_CASE("bilinear and symmetric on square classes") {
        const long reps[] = {1, -1, 2, -2, 5, -5, 10, -10};
        for (long a : reps) {
            for (long b : reps) {
                CHECK(hilbert2(a, b) == hilbert2(b, a));
                for (long c : reps) CHECK(hilbert2(Rational(a * c), b) == (hilbert2(a, b) + hilbert2(c, b)) % 2);
                CHECK(hilbert2(a, b) == oracle::hilbert2_mod256(a, b));
            }
        }
        // scaling by squares changes nothing
        CHECK(oracle::hilbert2_mod256(Rational(-4, 9), 3) == hilbert2(-1, 3));
    }

    TEST_CASE("odd symbol") {
        CHECK(hilbert_odd(2, 7, 3) == 0);
        CHECK(hilbert_odd(3, 2, 3) == 1);
        CHECK(hilbert_odd(3, 3, 3) == 1);
        CHECK(hilbert_odd(5, 5, 5) == 0);
        CHECK(hilbert_odd(-1, 3, 3) == 1);
        CHECK_THROWS_AS(hilbert_odd(2, 3, 2), Error);
        CHECK_THROWS_AS(hilbert_odd(2, 3, 9), Error);
    }

    TEST_CASE("sigma2 and moore") {
        CommutingPair id{{{1, 7, 3}}};
        CHECK(sigma2(id).factors.empty());
        CHECK(sigma2(id, false).factors.size() == 1);
        CommutingPair neg{{{-1, 3, 1}}};
        CHECK(sigma2(neg).factors == std::vector<SteinbergFactor>{{-1, 3, 1}});
        CommutingPair two{{{2, 3, 2}}};
        CHECK(sigma2(two).factors == std::vector<SteinbergFactor>{{Rational(1, 2), 3, 2}});
        CHECK(moore_h2({}) == 0);
        CHECK(moore_h2({{{-1, 3, 1}}}) == 1);
        CHECK(moore_h2({{{-1, 5, 1}}}) == 0);
        CHECK(moore_h2({{{-1, 3, 2}}}) == 0);
        CHECK(moore_h2({{{-1, 3, -1}}}) == 1);
    }
}
