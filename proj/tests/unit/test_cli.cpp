#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = motivic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("count") {
        auto r = call({"count", "P(2) over 2", "--upto", "3"});
        REQUIRE(r.code == 0);
        CHECK(strings(json::parse(r.out)["counts"]) == std::vector<std::string>{"7", "21", "73"});
        r = call({"count", "point over 7", "--upto", "2"});
        CHECK(strings(json::parse(r.out)["counts"]) == std::vector<std::string>{"1", "1"});
        r = call({"count", "affine over 2 vars x,y : y^2+y+x^3", "--upto", "4"});
        CHECK(strings(json::parse(r.out)["counts"]) == std::vector<std::string>{"2", "8", "8", "8"});
        r = call({"count", "A(1)", "-q", "9", "-m", "2"});
        CHECK(strings(json::parse(r.out)["counts"]) == std::vector<std::string>{"9", "81"});
    }

    TEST_CASE("zeta") {
        auto r = call({"zeta", "P(1) over 2", "-n", "6", "--rational"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(strings(j["rational"]["denominator"]) == std::vector<std::string>{"1", "-3", "2"});
        CHECK(j["witt"]["precision"] == 6);
        r = call({"zeta", "point over 3", "-n", "4"});
        CHECK(strings(json::parse(r.out)["witt"]["coeffs"]) == std::vector<std::string>{"1", "1", "1", "1"});
        r = call({"zeta", "union(A(1),point) over 3", "-n", "4", "--rational"});
        REQUIRE(r.code == 0);
        j = json::parse(r.out);
        CHECK(strings(j["rational"]["numerator"]) == std::vector<std::string>{"1"});
        CHECK(strings(j["rational"]["denominator"]) == std::vector<std::string>{"1", "-4", "3"});
        r = call({"zeta", "proj over 2 vars x,y,z : y^2*z+y*z^2+x^3", "-n", "6", "--rational"});
        j = json::parse(r.out);
        CHECK(j["weil"]["passed"] == true);
        CHECK(j["weil"]["genus"] == 1);
    }

    TEST_CASE("h2") {
        auto r = call({"h2", "union(P(1),P(1))", "--swap", "--frob", "3"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["value"] == 1);
        CHECK(j["symbols"].size() == 1);
        CHECK(json::parse(call({"h2", "union(point,point)", "--swap", "--frob", "3"}).out)["value"] == 0);
        CHECK(json::parse(call({"h2", "union(P(1),P(1))", "--swap", "--conj"}).out)["value"] == 1);
        CHECK(json::parse(call({"h2", "\"union(P(1),P(1))\" swap=(1 2) galois=frob q=7"}).out)["value"] == 1);
        CHECK(json::parse(call({"h2", "union(P(1),P(1)) swap=(1 2) galois=frob q=5"}).out)["value"] == 0);
        CHECK(json::parse(call({"h2", "union(P(1),P(1))", "--swap", "--frob", "7", "--ell", "3"}).out)["value"] == 0);
    }

    TEST_CASE("witt and rational") {
        auto r = call({"witt", "add", "1,1,1", "[2,4,8]"});
        REQUIRE(r.code == 0);
        CHECK(strings(json::parse(r.out)["coeffs"]) == std::vector<std::string>{"3", "7", "15"});
        r = call({"witt", "mul", "{\"precision\":3,\"coeffs\":[\"2\",\"4\",\"8\"]}", "3,9,27"});
        CHECK(strings(json::parse(r.out)["coeffs"]) == std::vector<std::string>{"6", "36", "216"});
        r = call({"witt", "ghost", "3,7,15"});
        CHECK(strings(json::parse(r.out)["ghost"]) == std::vector<std::string>{"3", "5", "9"});
        r = call({"witt", "teichmuller", "-2", "-n", "3"});
        CHECK(strings(json::parse(r.out)["coeffs"]) == std::vector<std::string>{"-2", "4", "-8"});
        r = call({"witt", "from-ghost", "1,0"});
        CHECK(r.code == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "NonIntegralSeries");
        r = call({"rational", "3,7,15,31,63,127"});
        REQUIRE(r.code == 0);
        CHECK(strings(json::parse(r.out)["rational"]["denominator"]) == std::vector<std::string>{"1", "-3", "2"});
        r = call({"rational", "1,2,5,14,42,132"});
        CHECK(r.code == 4);
        CHECK(json::parse(r.err)["error"]["code"] == "NoRationalForm");
    }

    TEST_CASE("exit codes and error objects") {
        auto r = call({"count", "P(2 over 2"});
        CHECK(r.code == 2);
        auto e = json::parse(r.err)["error"];
        CHECK(e["code"] == "SyntaxError");
        CHECK(e.contains("position"));
        CHECK(call({"count"}).code == 2);
        CHECK(call({"frobnicate"}).code == 2);
        CHECK(call({"h2", "union(P(1),P(1),P(1))", "--perm", "(1 2 3)", "--frob", "3"}).code == 5);
        CHECK(call({"h2", "union(P(1),A(1))", "--swap", "--frob", "3"}).code == 5);
        CHECK(json::parse(call({"count", "A(1)"}).err)["error"]["code"] == "ValidationError");

        setenv("MOTIVIC_BUDGET", "100", 1);
        r = call({"count", "affine over 5 vars x,y,z : x*y*z - 1", "-m", "2"});
        unsetenv("MOTIVIC_BUDGET");
        CHECK(r.code == 3);
        CHECK(json::parse(r.err)["error"]["code"] == "BudgetExceeded");
        setenv("MOTIVIC_BUDGET", "lots", 1);
        CHECK(call({"count", "point over 2"}).code == 2);
        unsetenv("MOTIVIC_BUDGET");
    }

    TEST_CASE("plain output and determinism") {
        auto r = call({"--plain", "count", "P(1) over 3", "-m", "2"});
        CHECK(r.out == "P(1) over 3\n   m  N_m\n   1  4\n   2  10\n");
        CHECK(call({"count", "P(1) over 3", "-m", "2", "--plain"}).out == r.out);
        const auto a = call({"verify", "witt-ring", "--seed", "9"});
        const auto b = call({"verify", "witt-ring", "--seed", "9"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out)["seed"] == 9);
    }

    TEST_CASE("verify") {
        auto r = call({"verify", "hilbert-oracle"});
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["passed"] == true);
        CHECK(call({"verify", "nonsense"}).code == 2);
    }
}
