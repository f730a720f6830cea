#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singulab/errors.hpp"
#include "singulab/ideal.hpp"
#include "singulab/macaulay.hpp"
#include "singulab/milnor.hpp"
#include "singulab/parser.hpp"
#include "singulab/standard_basis.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace singulab;
using singulab::testing::random_isolated_germ;
using singulab::testing::random_polynomial;
using singulab::testing::random_unimodular;

namespace {

Polynomial parse2(const std::string& text) {
    auto result = parse_polynomial(text, {"x", "y"});
    REQUIRE(result.ok);
    return result.value;
}

Polynomial parse3(const std::string& text) {
    auto result = parse_polynomial(text, {"x1", "x2", "x3"});
    REQUIRE(result.ok);
    return result.value;
}

bool reduced_against(const Polynomial& p, const StandardBasis& basis) {
    for (const Term& t : p.terms())
        for (const Monomial& lm : basis.leading_monomials)
            if (lm.divides(t.mono)) return false;
    return true;
}

} // namespace

TEST_CASE("standard basis of the cusp Jacobian has leading monomials y and x^2") {
    Polynomial f = parse2("x^3 - y^2");
    StandardBasis basis = standard_basis(jacobian_ideal(f), LocalOrder(2));
    REQUIRE(basis.leading_monomials.size() == 2);
    std::vector<Monomial> lms = basis.leading_monomials;
    std::sort(lms.begin(), lms.end(), [](const Monomial& a, const Monomial& b) {
        return a.exponents() < b.exponents();
    });
    CHECK(lms[0] == Monomial({0, 1}));
    CHECK(lms[1] == Monomial({2, 0}));
    MilnorResult mu = milnor_number(f);
    REQUIRE(mu.finite);
    CHECK(mu.value == 2);
}

TEST_CASE("normal forms are reduced, idempotent, and vanish on ideal members") {
    std::mt19937 rng(53);
    LocalOrder order(2);
    int checked = 0;
    while (checked < 8) {
        Polynomial f = random_isolated_germ(2, 5, rng);
        Ideal jac = jacobian_ideal(f);
        StandardBasis basis = standard_basis(jac, order);
        ++checked;

        Polynomial p = random_polynomial(2, 6, 0, rng);
        Polynomial nf = mora_normal_form(p, basis.elements, order);
        CHECK(reduced_against(nf, basis));
        CHECK(mora_normal_form(nf, basis.elements, order) == nf);
        // p - NF(p) lies in the ideal, so its normal form vanishes.
        CHECK(mora_normal_form(p - nf, basis.elements, order).is_zero());

        // Monomial multiples of generators are ideal members.
        for (const Polynomial& g : jac.generators) {
            Polynomial member = g.times_term(make_rational(3, 2), Monomial({1, 2}));
            CHECK(mora_normal_form(member, basis.elements, order).is_zero());
        }
    }
}

TEST_CASE("leading monomials of a minimal basis are incomparable") {
    std::mt19937 rng(59);
    for (int i = 0; i < 6; ++i) {
        Polynomial f = random_isolated_germ(2, 5, rng);
        StandardBasis basis = standard_basis(jacobian_ideal(f), LocalOrder(2));
        for (std::size_t a = 0; a < basis.leading_monomials.size(); ++a)
            for (std::size_t b = 0; b < basis.leading_monomials.size(); ++b)
                if (a != b) CHECK_FALSE(basis.leading_monomials[a].divides(basis.leading_monomials[b]));
    }
}

TEST_CASE("milnor numbers of the catalog germs") {
    struct GoldenCase {
        const char* text;
        long mu;
    };
    const GoldenCase plane_cases[] = {
        {"x^4 - y^3", 6},        // order 3 cusp-like germ
        {"x^3 + y^3", 4},
        {"x^5 + y^5", 16},
        {"x^4 + y^4", 9},
        {"x^4 + y^4 + 2*(x^2*y^2 + y^6)", 13},
        {"x^4 + x^2*y^2 + y^4", 9},
        {"(x^2 + y^2)^2 + y^6", 13},
        {"x^7 - y^3", 12},
        {"x^10 - y^3", 18},
        {"x^2 + y^2", 1},
        {"x^2 - y^2", 1},
        {"x^3 - y^2", 2},
    };
    for (const GoldenCase& c : plane_cases) {
        CAPTURE(c.text);
        MilnorResult mu = milnor_number(parse2(c.text));
        REQUIRE(mu.finite);
        CHECK(mu.value == c.mu);
        CHECK(mu.certificate == StaircaseCertificate::StaircaseClosed);
        CHECK(static_cast<long>(mu.standard_monomials.size()) == mu.value);
    }

    for (int i = 1; i <= 4; ++i) {
        Polynomial wall = parse3("x1^" + std::to_string(2 * i) + " + x2^2 - x3^2");
        MilnorResult mu = milnor_number(wall);
        REQUIRE(mu.finite);
        CHECK(mu.value == 2 * i - 1);
    }

    // A regular germ has an empty staircase.
    MilnorResult regular = milnor_number(parse2("y"));
    REQUIRE(regular.finite);
    CHECK(regular.value == 0);
    CHECK(regular.standard_monomials.empty());
}

TEST_CASE("degenerate germs are certified by a missing pure power") {
    MilnorResult square = milnor_number(parse2("(x^2 + y^2)^2"));
    CHECK_FALSE(square.finite);
    CHECK(square.certificate == StaircaseCertificate::MissingPurePower);
    CHECK(square.missing_variable == 1); // x^3 leads one generator, no pure y power exists

    MilnorResult cross = milnor_number(parse2("x^2*y^2"));
    CHECK_FALSE(cross.finite);
    CHECK(cross.missing_variable == 0);

    MilnorResult constant = milnor_number(Polynomial::constant(2, Rational(3)));
    CHECK_FALSE(constant.finite);

    CHECK_FALSE(is_algebraically_isolated(parse2("(x^2 + y^2)^2")));
    CHECK(is_algebraically_isolated(parse2("x^4 + y^4")));
}

TEST_CASE("staircase count is independent of generator presentation") {
    std::mt19937 rng(61);
    for (int i = 0; i < 6; ++i) {
        Polynomial f = random_isolated_germ(2, 5, rng);
        Ideal jac = jacobian_ideal(f);
        MilnorResult reference = milnor_number(f);
        REQUIRE(reference.finite);

        // Permute, rescale, and pad the generating set: same ideal, same staircase.
        std::vector<Polynomial> shuffled;
        for (auto it = jac.generators.rbegin(); it != jac.generators.rend(); ++it)
            shuffled.push_back(it->scaled(make_rational(-2, 7)));
        shuffled.push_back(jac.generators.front() +
                           jac.generators.back().times_term(Rational(1), Monomial({1, 1})));
        StandardBasis basis = standard_basis(make_ideal(2, shuffled), LocalOrder(2));

        std::vector<Monomial> original =
            standard_basis(jac, LocalOrder(2)).leading_monomials;
        auto key = [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); };
        std::sort(original.begin(), original.end(), key);
        std::vector<Monomial> rebuilt = basis.leading_monomials;
        std::sort(rebuilt.begin(), rebuilt.end(), key);
        CHECK(original == rebuilt);
    }
}

TEST_CASE("milnor number agrees with the truncation oracle") {
    const char* texts[] = {"x^4 - y^3", "x^3 + y^3", "x^4 + y^4",
                           "x^4 + y^4 + 2*(x^2*y^2 + y^6)", "x^3 - y^2"};
    for (const char* text : texts) {
        CAPTURE(text);
        MilnorResult mu = milnor_number(parse2(text));
        REQUIRE(mu.finite);
        OracleResult oracle = milnor_number_oracle(parse2(text));
        REQUIRE(oracle.conclusive);
        CHECK(oracle.value == mu.value);
    }

    std::mt19937 rng(67);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = random_isolated_germ(2, 5, rng);
        MilnorResult mu = milnor_number(f);
        REQUIRE(mu.finite);
        OracleResult oracle = milnor_number_oracle(f);
        REQUIRE(oracle.conclusive);
        CHECK(oracle.value == mu.value);
    }
}

TEST_CASE("truncated dimensions are eventually constant at the milnor number") {
    Polynomial f = parse2("x^4 - y^3");
    MilnorResult mu = milnor_number(f);
    REQUIRE(mu.finite);
    OracleResult oracle = milnor_number_oracle(f, 14, 3);
    REQUIRE(oracle.conclusive);
    // Once the plateau is reached every later dimension equals mu.
    bool seen_plateau = false;
    for (long dim : oracle.dimensions) {
        if (dim == mu.value) seen_plateau = true;
        if (seen_plateau) CHECK(dim == mu.value);
    }
    CHECK(seen_plateau);
    CHECK(oracle.value == mu.value);

    // Truncation below the stabilization degree undershoots, never overshoots.
    for (int d = 1; d <= 12; ++d) CHECK(truncated_quotient_dimension(f, d) <= mu.value);
}

TEST_CASE("milnor number is invariant under unimodular coordinate changes") {
    std::mt19937 rng(71);
    const char* texts[] = {"x^4 - y^3", "x^3 + y^3", "x^4 + y^4"};
    for (const char* text : texts) {
        Polynomial f = parse2(text);
        MilnorResult reference = milnor_number(f);
        REQUIRE(reference.finite);
        for (int i = 0; i < 5; ++i) {
            auto matrix = random_unimodular(2, rng);
            MilnorResult moved = milnor_number(f.composed_linear(matrix));
            REQUIRE(moved.finite);
            CHECK(moved.value == reference.value);
        }
    }
}

TEST_CASE("step cap raises ResourceLimitError instead of truncating") {
    // A dense coordinate image keeps the basis completion step-hungry.
    Polynomial f = parse2("(x + y)^4 + y^4 + 2*((x + y)^2*y^2 + y^6)");
    CHECK_THROWS_AS(milnor_number(f, 3), ResourceLimitError);
    CHECK_THROWS_AS(standard_basis(jacobian_ideal(f), LocalOrder(2), 3), ResourceLimitError);

    // Reducing a product of the Jacobian generators to zero needs several steps.
    Ideal jac = jacobian_ideal(f);
    StandardBasis basis = standard_basis(jac, LocalOrder(2));
    Polynomial member = jac.generators[0] * jac.generators[1];
    CHECK(mora_normal_form(member, basis.elements, LocalOrder(2)).is_zero());
    CHECK_THROWS_AS(mora_normal_form(member, basis.elements, LocalOrder(2), 1),
                    ResourceLimitError);

    // The error reports the configured cap and the step count that tripped it.
    try {
        milnor_number(f, 2);
        FAIL("expected ResourceLimitError");
    } catch (const ResourceLimitError& error) {
        CHECK(error.cap() == 2);
        CHECK(error.steps() > error.cap());
    }
}
