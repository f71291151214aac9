#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "tunnelwell/expr.hpp"

using namespace tunnelwell;

namespace {
const std::map<std::string, double> kNoBindings;
}

TEST_CASE("parse: quartic family expression collects parameters") {
    const Expr e = parse("V0*(((x/a)^2-1)^2 - 1 - eta*(x/a))");
    CHECK(e.params() == std::set<std::string>{"V0", "a", "eta"});
    // V(a) = -V0 at eta = 0; V(0) = 0 (barrier top)
    const std::map<std::string, double> b{{"V0", 1.0}, {"a", 1.0}, {"eta", 0.0}};
    CHECK(e.eval(1.0, b) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e.eval(0.0, b) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("parse: precedence and associativity") {
    CHECK(parse("x").eval(3.5, kNoBindings) == 3.5);
    CHECK(parse("1+2*3").eval(0.0, kNoBindings) == 7.0);
    CHECK(parse("2^3^2").eval(0.0, kNoBindings) == 512.0); // right-assoc
    CHECK(parse("-2^2").eval(0.0, kNoBindings) == -4.0);   // ^ binds above unary minus
    CHECK(parse("2^-1").eval(0.0, kNoBindings) == 0.5);
    CHECK(parse("(1+2)*3").eval(0.0, kNoBindings) == 9.0);
    CHECK(parse("6/3/2").eval(0.0, kNoBindings) == 1.0);   // left-assoc
}

TEST_CASE("eval: function whitelist") {
    CHECK(parse("exp(-x^2)").eval(1.0, kNoBindings) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(parse("sin(x)^2 + cos(x)^2").eval(0.7, kNoBindings) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(parse("sqrt(abs(x))").eval(-4.0, kNoBindings) == 2.0);
    CHECK(parse("log(exp(x))").eval(2.5, kNoBindings) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(parse("tanh(x)").eval(100.0, kNoBindings) == doctest::Approx(1.0));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("1+"), SyntaxError);
    CHECK_THROWS_AS(parse("(1+2"), SyntaxError);
    CHECK_THROWS_AS(parse("1 2"), SyntaxError);
    try {
        parse("1+*2");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse("foo(x)"), UnknownIdentifier);
    CHECK_THROWS_AS(parse("sin(x, 1)"), ArityError);
}

TEST_CASE("eval errors: bindings and domains") {
    const Expr e = parse("k*x");
    CHECK_THROWS_AS(e.eval(1.0, kNoBindings), MissingBinding);
    CHECK_THROWS_AS(parse("1/x").eval(0.0, kNoBindings), DomainError);
    CHECK_THROWS_AS(parse("sqrt(x)").eval(-1.0, kNoBindings), DomainError);
    CHECK_THROWS_AS(parse("log(x)").eval(0.0, kNoBindings), DomainError);
}

TEST_CASE("compositionality and redundant parentheses") {
    const Expr sum = parse("sin(x) + x^3");
    const Expr a = parse("sin(x)");
    const Expr b = parse("x^3");
    for (double x : {-2.0, -0.5, 0.0, 1.3, 4.0}) {
        CHECK(sum.eval(x, kNoBindings) == a.eval(x, kNoBindings) + b.eval(x, kNoBindings));
    }
    CHECK(parse("(x+1)").pretty_print() == parse("x+1").pretty_print());
}

namespace {

// Random expression source text; grammar-valid by construction.
std::string random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
    switch (pick(rng)) {
    case 0: {
        std::uniform_real_distribution<double> num(0.1, 9.9);
        return std::to_string(num(rng));
    }
    case 1: return "x";
    case 2: return std::array<const char*, 3>{"p", "q", "w"}[rng() % 3];
    case 3: return "(" + random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1) + ")";
    case 4: return "(" + random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1) + ")";
    case 5: return "(-" + random_expr(rng, depth - 1) + ")";
    default: {
        const char* fn = std::array<const char*, 3>{"sin", "cos", "tanh"}[rng() % 3];
        return std::string(fn) + "(" + random_expr(rng, depth - 1) + ")";
    }
    }
}

} // namespace

TEST_CASE("round-trip: pretty_print re-parses to an equivalent tree") {
    std::mt19937 rng(2024);
    const std::map<std::string, double> b{{"p", 0.3}, {"q", -1.7}, {"w", 2.2}};
    for (int trial = 0; trial < 40; ++trial) {
        const std::string text = random_expr(rng, 4);
        const Expr e1 = parse(text);
        const std::string printed = e1.pretty_print();
        const Expr e2 = parse(printed);
        CHECK(e2.pretty_print() == printed); // canonical form is a fixed point
        CHECK(e2.params() == e1.params());
        for (double x : {-1.5, 0.0, 0.8}) {
            CHECK(e2.eval(x, b) == doctest::Approx(e1.eval(x, b)).epsilon(1e-14));
        }
    }
}
