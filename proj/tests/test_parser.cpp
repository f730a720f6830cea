#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singulab/map_expr.hpp"
#include "singulab/parser.hpp"
#include "singulab/polynomial.hpp"

#include "test_support.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace singulab;
using singulab::testing::random_polynomial;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

Polynomial parse_ok(const std::string& text, const std::vector<std::string>& vars) {
    auto result = parse_polynomial(text, vars);
    CAPTURE(text);
    REQUIRE(result.ok);
    CHECK(result.diagnostics.empty());
    CHECK(result.variables == vars);
    return result.value;
}

ParseDiagnostic first_error(const std::string& text, const std::vector<std::string>& vars) {
    auto result = parse_polynomial(text, vars);
    CAPTURE(text);
    REQUIRE_FALSE(result.ok);
    REQUIRE(result.diagnostics.size() == 1);
    return result.diagnostics.front();
}

Polynomial p2(long c, int a, int b) { return Polynomial::single_term(Rational(c), Monomial({a, b})); }

} // namespace

TEST_CASE("polynomial grammar accepts the standard input shapes") {
    CHECK(parse_ok("x^4 - y^3", kXY) == p2(1, 4, 0) + p2(-1, 0, 3));
    CHECK(parse_ok("(x + y)^2", kXY) == p2(1, 2, 0) + p2(2, 1, 1) + p2(1, 0, 2));
    CHECK(parse_ok("(x + y)(x - y)", kXY) == p2(1, 2, 0) + p2(-1, 0, 2));
    CHECK(parse_ok("3/4*x", kXY) == p2(3, 1, 0).scaled(make_rational(1, 4)));
    CHECK(parse_ok("2 x y", kXY) == p2(2, 1, 1));
    CHECK(parse_ok("-3x + 2y", kXY) == p2(-3, 1, 0) + p2(2, 0, 1));
    CHECK(parse_ok("+x - y", kXY) == p2(1, 1, 0) + p2(-1, 0, 1));
    CHECK(parse_ok("x^0", kXY) == Polynomial::constant(2, Rational(1)));
    CHECK(parse_ok("2/3", kXY) == Polynomial::constant(2, make_rational(2, 3)));
    CHECK(parse_ok("0", kXY).is_zero());
    CHECK(parse_ok("x^2 - x^2", kXY).is_zero());
    CHECK(parse_ok("x1^2 + x2^2 - x3^2", {"x1", "x2", "x3"}) ==
          Polynomial::single_term(Rational(1), Monomial({2, 0, 0})) +
              Polynomial::single_term(Rational(1), Monomial({0, 2, 0})) +
              Polynomial::single_term(Rational(-1), Monomial({0, 0, 2})));
    // Multiplication binds juxtaposed parens too.
    CHECK(parse_ok("2(x + y)y", kXY) == p2(2, 1, 1) + p2(2, 0, 2));
}

TEST_CASE("polynomial grammar rejects map-only syntax with positions") {
    ParseDiagnostic division = first_error("x/y", kXY);
    CHECK(division.message == "division requires map mode");
    CHECK(division.position == 1);

    ParseDiagnostic fractional = first_error("x^(1/2)", kXY);
    CHECK(fractional.message == "fractional exponent requires map mode");
    CHECK(fractional.position == 2);

    ParseDiagnostic negative = first_error("x^-2", kXY);
    CHECK(negative.message == "negative exponent requires map mode");
    CHECK(negative.position == 2);

    ParseDiagnostic abs_call = first_error("abs(x)", kXY);
    CHECK(abs_call.message == "unknown variable 'abs'");
    CHECK(abs_call.position == 0);
}

TEST_CASE("syntax errors carry byte positions") {
    ParseDiagnostic stray = first_error("x + * y", kXY);
    CHECK(stray.message == "unexpected '*'");
    CHECK(stray.position == 4);

    ParseDiagnostic dangling = first_error("x + ", kXY);
    CHECK(dangling.message == "expected expression");
    CHECK(dangling.position == 4);

    ParseDiagnostic unclosed = first_error("(x", kXY);
    CHECK(unclosed.message == "expected ')'");
    CHECK(unclosed.position == 2);

    ParseDiagnostic bad_char = first_error("x $ y", kXY);
    CHECK(bad_char.message == "unexpected character '$'");
    CHECK(bad_char.position == 2);

    ParseDiagnostic unknown = first_error("z + x", kXY);
    CHECK(unknown.message == "unknown variable 'z'");
    CHECK(unknown.position == 0);

    ParseDiagnostic trailing = first_error("x y )", kXY);
    CHECK(trailing.message == "unexpected ')'");
    CHECK(trailing.position == 4);

    // Signs do not nest after a binary operator.
    ParseDiagnostic doubled = first_error("x + +y", kXY);
    CHECK(doubled.message == "unexpected '+'");
    CHECK(doubled.position == 4);
}

TEST_CASE("variable declarations are validated") {
    CHECK_THROWS_AS(parse_polynomial("x", {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x", {"2x"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x", {"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x", {"a b"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_map("x", {""}), std::invalid_argument);
    // Alphanumeric tails are legal and lex as one identifier.
    CHECK(parse_ok("x2", {"x1", "x2"}) ==
          Polynomial::variable(2, 1));
}

TEST_CASE("printed polynomials parse back to themselves") {
    std::mt19937 rng(89);
    const std::vector<std::string> names3 = {"x1", "x2", "x3"};
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_polynomial(2, 6, 0, rng);
        auto round = parse_polynomial(p.to_string(kXY), kXY);
        REQUIRE(round.ok);
        CHECK(round.value == p);
    }
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_polynomial(3, 4, 0, rng);
        auto round = parse_polynomial(p.to_string(names3), names3);
        REQUIRE(round.ok);
        CHECK(round.value == p);
    }
}

TEST_CASE("exponent slash munches only a bare rational literal") {
    // x^4/3 is the fractional power x^(4/3).
    auto fractional = parse_map("x^4/3", {"x"});
    REQUIRE(fractional.ok);
    MapExpr frac_map = make_map(fractional);
    CHECK(frac_map.evaluate({8.0})[0] == doctest::Approx(std::pow(8.0, 4.0 / 3.0)));
    REQUIRE(frac_map.fractional_exponents().size() == 1);
    CHECK(frac_map.fractional_exponents()[0] == make_rational(4, 3));

    // x^4/(1+y) keeps the integer power and divides.
    auto divided = parse_map("x^4/(1 + y)", {"x", "y"});
    REQUIRE(divided.ok);
    MapExpr div_map = make_map(divided);
    CHECK(div_map.evaluate({2.0, 0.0})[0] == doctest::Approx(16.0));
    CHECK(div_map.evaluate({2.0, 1.0})[0] == doctest::Approx(8.0));
    CHECK(div_map.fractional_exponents().empty());

    // A parenthesized exponent closes before the slash.
    auto closed = parse_map("x^(2)/3", {"x"});
    REQUIRE(closed.ok);
    CHECK(make_map(closed).evaluate({3.0})[0] == doctest::Approx(3.0));

    // The same input is a clean split in polynomial mode too.
    ParseDiagnostic poly_divide = first_error("x^4/(1 + y)", kXY);
    CHECK(poly_divide.message == "division requires map mode");
}

TEST_CASE("map mode parses components, abs, and signed exponents") {
    auto result = parse_map("x; x^(4/3) - y", kXY);
    REQUIRE(result.ok);
    CHECK(result.components.size() == 2);
    MapExpr map = make_map(result);
    CHECK(map.arity() == 2);
    CHECK(map.coarity() == 2);
    CHECK(map.evaluate({1.0, 1.0})[1] == doctest::Approx(0.0));

    auto inverse = parse_map("x^-2", {"x"});
    REQUIRE(inverse.ok);
    CHECK(make_map(inverse).evaluate({2.0})[0] == doctest::Approx(0.25));

    auto with_abs = parse_map("x/abs(x)^(1/2)", {"x"});
    REQUIRE(with_abs.ok);
    CHECK(make_map(with_abs).evaluate({4.0})[0] == doctest::Approx(2.0));
    CHECK(make_map(with_abs).evaluate({-4.0})[0] == doctest::Approx(-2.0));

    // abs stays available as a variable name when declared.
    auto shadowed = parse_map("abs + 1", {"abs"});
    REQUIRE(shadowed.ok);
    CHECK(make_map(shadowed).evaluate({2.0})[0] == doctest::Approx(3.0));

    auto zero_den = parse_map("x^(1/0)", {"x"});
    REQUIRE_FALSE(zero_den.ok);
    REQUIRE(zero_den.diagnostics.size() == 1);
    CHECK(zero_den.diagnostics[0].message == "zero denominator in rational literal");
    CHECK(zero_den.diagnostics[0].position == 4);

    auto empty_component = parse_map("x;; y", kXY);
    CHECK_FALSE(empty_component.ok);

    CHECK_THROWS_AS(make_map(empty_component), std::invalid_argument);
}

TEST_CASE("printed map expressions are a rendering fixpoint") {
    const char* sources[] = {
        "x; x^(4/3) - y",
        "x/abs(x)^(1/2); y",
        "abs(x + y)*(x - y)",
        "-x + y/3; 2*x*y",
        "x^-2 + (x + 1)^(2/3)",
        "1/2*x; -3/4 + y",
        "abs(abs(x) - abs(y))",
        "(x + y)/(x - y)",
    };
    for (const char* source : sources) {
        CAPTURE(source);
        auto first = parse_map(source, kXY);
        REQUIRE(first.ok);
        std::string printed = to_string(make_map(first), kXY);
        auto second = parse_map(printed, kXY);
        REQUIRE(second.ok);
        CHECK(to_string(make_map(second), kXY) == printed);

        // The reparsed map evaluates identically.
        MapExpr a = make_map(first), b = make_map(second);
        const std::vector<double> probe = {0.7, -0.3};
        std::vector<double> va, vb;
        bool a_ok = true, b_ok = true;
        try {
            va = a.evaluate(probe);
        } catch (...) {
            a_ok = false;
        }
        try {
            vb = b.evaluate(probe);
        } catch (...) {
            b_ok = false;
        }
        REQUIRE(a_ok == b_ok);
        if (a_ok) {
            REQUIRE(va.size() == vb.size());
            for (std::size_t i = 0; i < va.size(); ++i)
                CHECK(va[i] == doctest::Approx(vb[i]).epsilon(1e-12));
        }
    }
}
