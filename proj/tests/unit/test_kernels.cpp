#include <doctest.h>

#include <random>

#include "motivic/count_kernels.hpp"
#include "motivic/error.hpp"
#include "motivic/variety.hpp"

using namespace motivic;

namespace {

std::string random_poly(std::mt19937_64& rng, std::size_t nvars, bool homogeneous, unsigned degree) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::uniform_int_distribution<int> coeff(1, 6), expo(0, static_cast<int>(degree)), terms(1, 4);
    std::string out;
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        std::string mono = std::to_string(coeff(rng));
        unsigned left = homogeneous ? degree : static_cast<unsigned>(expo(rng));
        for (std::size_t v = 0; v < nvars; ++v) {
            unsigned e = v + 1 == nvars && homogeneous ? left : std::uniform_int_distribution<unsigned>(0, left)(rng);
            left -= e;
            if (e) mono += std::string("*") + names[v] + "^" + std::to_string(e);
        }
        out += (i ? " + " : "") + mono;
    }
    return out;
}

std::string vars(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + std::string(names[i]);
    return s;
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("parallel, generic and serial kernels agree on random systems") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 120; ++trial) {
            const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[trial % 3];
            const std::size_t nv = 1 + trial % 3;
            const unsigned m = p == 5 && nv == 3 ? 1 : 1 + trial % 2;
            const bool proj = trial % 4 == 3 && nv >= 2;
            const unsigned deg = 1 + trial % 3;
            std::string text = std::string(proj ? "proj" : "affine") + " over " + std::to_string(p) + " vars " + vars(nv) + " : ";
            const int npolys = 1 + trial % 2;
            for (int i = 0; i < npolys; ++i) text += (i ? " ; " : "") + random_poly(rng, nv, proj, deg);
            CAPTURE(text);
            CAPTURE(m);
            VarietyExpr x = VarietyExpr::point(p);
            try {
                x = parse_variety(text);
            } catch (const Error&) {
                continue;  // all coefficients vanished mod p
            }
            const PolySystem& sys = x.system();
            const BigInt ref = kernels::count_system_reference(sys, m, 1u << 22);
            CHECK(kernels::count_system(sys, m, 1u << 22) == ref);
            if (!proj) {
                CHECK(kernels::count_affine_parallel(sys, m, 1u << 22) == ref);
                CHECK(kernels::count_affine_parallel_generic(sys, m, 1u << 22) == ref);
                CHECK(kernels::count_affine_serial(sys, m, 1u << 22) == ref);
            }
        }
    }

    TEST_CASE("Zech and generic arithmetic agree across the table limit") {
        const VarietyExpr e = parse_variety("affine over 2 vars x,y : y^2 + y + x^3 + x*y");
        for (unsigned m : {1u, 5u, 9u, 12u}) {
            CAPTURE(m);
            CHECK(kernels::count_affine_parallel(e.system(), m, 1u << 22) ==
                  kernels::count_affine_parallel_generic(e.system(), m, 1u << 22));
        }
    }

    TEST_CASE("free variables and constants") {
        const VarietyExpr plane = parse_variety("affine over 3 vars x,y,z : z");
        CHECK(kernels::count_system(plane.system(), 4, 1) == pow_big(3, 8));
        const VarietyExpr empty = parse_variety("affine over 3 vars x : 1");
        CHECK(kernels::count_system(empty.system(), 2, 10) == 0);
        const VarietyExpr all = parse_variety("affine over 3 vars x,y : x - x");
        CHECK(kernels::count_system(all.system(), 2, 10) == 81);
    }

    TEST_CASE("budget is enforced by both paths") {
        const VarietyExpr x = parse_variety("affine over 2 vars x,y,z : x*y + z^2 + x");
        CHECK_THROWS_AS(kernels::count_system(x.system(), 6, 100), Error);
        CHECK_THROWS_AS(kernels::count_system_reference(x.system(), 3, 100), Error);
    }
}
