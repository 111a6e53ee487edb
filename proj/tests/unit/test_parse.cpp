#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/variety.hpp"

using namespace motivic;

namespace {

ErrorCode parse_code(std::string_view text, std::optional<std::size_t>* pos = nullptr) {
    try {
        parse_variety(text);
    } catch (const Error& e) {
        if (pos) *pos = e.position();
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("parse") {
    TEST_CASE("catalog shapes") {
        const VarietyExpr x = parse_variety("P(1) over 5");
        CHECK(x.kind() == VarietyExpr::Kind::Projective);
        CHECK(x.dim() == 1);
        CHECK(x.q() == 5);
        CHECK(parse_variety("T(3) over 9").q() == 9);
        CHECK(parse_variety("point", 7) == VarietyExpr::point(7));
    }

    TEST_CASE("concrete systems") {
        const VarietyExpr e = parse_variety("affine over 2 vars x,y : y^2 + y + x^3");
        REQUIRE(e.kind() == VarietyExpr::Kind::Concrete);
        CHECK(e.system().p == 2);
        CHECK(e.system().vars == std::vector<std::string>{"x", "y"});
        CHECK(e.system().polys.size() == 1);
        CHECK(print_variety(e) == "affine vars x,y : x^3 + y^2 + y over 2");

        // coefficients reduce mod p
        const VarietyExpr r = parse_variety("affine over 3 vars x : 4*x^2 - 7 + (x + 1)^2 - x^2 - 2*x");
        CHECK(print_variety(r) == "affine vars x : x^2 over 3");
    }

    TEST_CASE("complement example") {
        const VarietyExpr c = parse_variety("complement( P(2), proj vars x,y,z : z ) over 3");
        CHECK(c.kind() == VarietyExpr::Kind::Complement);
        CHECK(print_variety(c) == "complement(P(2), proj vars x,y,z : z) over 3");
        CHECK(point_count(c, 1) == 9);
    }

    TEST_CASE("print then parse round-trips") {
        for (const char* text :
             {"point over 2", "A(3) over 4", "union(P(1), T(2), point) over 27", "product(A(1), P(2)) over 5",
              "complement(A(2), affine vars u,v : u*v - 1) over 7", "proj vars x,y,z : x^2 + y*z ; x*y over 3",
              "union(product(P(1), P(1)), complement(P(1), point)) over 2"}) {
            const VarietyExpr x = parse_variety(text);
            CHECK(parse_variety(print_variety(x)) == x);
            CHECK(print_variety(parse_variety(print_variety(x))) == print_variety(x));
        }
    }

    TEST_CASE("syntax errors carry positions") {
        std::optional<std::size_t> pos;
        CHECK(parse_code("P(2 over 2", &pos) == ErrorCode::SyntaxError);
        CHECK(pos.has_value());
        CHECK(parse_code("union() over 2") == ErrorCode::SyntaxError);
        CHECK(parse_code("A(1) over 2 trailing") == ErrorCode::SyntaxError);
        CHECK(parse_code("affine over 2 vars x : y") == ErrorCode::SyntaxError);
        CHECK(parse_code("affine over 2 vars x : x^") == ErrorCode::SyntaxError);
        CHECK(parse_code("affine over 2 vars x,x : x") != ErrorCode::Internal);
        CHECK(parse_code("Q(1) over 2", &pos) == ErrorCode::SyntaxError);
        CHECK(pos == 0);
    }

    TEST_CASE("validation errors") {
        CHECK(parse_code("proj over 3 vars x,y : x^2 + y") == ErrorCode::ValidationError);
        CHECK(parse_code("A(1) over 6") != ErrorCode::Internal);
        CHECK(parse_code("affine over 4 vars x : x") == ErrorCode::ValidationError);
        CHECK(parse_code("union(A(1) over 2, A(1) over 3)") == ErrorCode::ValidationError);
        CHECK(parse_code("A(1)") == ErrorCode::ValidationError);  // no base field
    }
}
