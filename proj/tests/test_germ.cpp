#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singulab/errors.hpp"
#include "singulab/germ.hpp"
#include "singulab/polynomial.hpp"

#include "test_support.hpp"

#include <random>

using namespace singulab;
using singulab::testing::random_polynomial;

namespace {

Polynomial p2(long c, int a, int b) { return Polynomial::single_term(Rational(c), Monomial({a, b})); }

const std::vector<Rational> kOrigin = {Rational(0), Rational(0)};

} // namespace

TEST_CASE("order_at distinguishes zeros, regular points, and off-zero points") {
    Polynomial f = p2(1, 4, 0) + p2(-1, 0, 3); // x^4 - y^3
    CHECK(order_at(f, kOrigin) == GermOrder::of(3));
    CHECK(order_at(f, {Rational(1), Rational(1)}) == GermOrder::of(1));  // regular zero
    CHECK(order_at(f, {Rational(2), Rational(1)}) == GermOrder::of(0)); // f != 0 there
    CHECK(order_at(Polynomial(2), kOrigin) == GermOrder::infinite());
    CHECK(GermOrder::of(3).to_string() == "3");
    CHECK(GermOrder::infinite().to_string() == "infinite");
}

TEST_CASE("order is additive under products") {
    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = random_polynomial(2, 5, 1, rng);
        Polynomial g = random_polynomial(2, 5, 2, rng);
        if (f.is_zero() || g.is_zero()) continue;
        GermOrder of = order_at(f, kOrigin), og = order_at(g, kOrigin);
        CHECK(order_at(f * g, kOrigin) == GermOrder::of(of.value + og.value));
    }
}

TEST_CASE("initial_part picks the lowest component in centered coordinates") {
    Polynomial f = p2(1, 4, 0) + p2(-1, 0, 3);
    CHECK(initial_part(f, kOrigin) == p2(-1, 0, 3));
    // At a point where f does not vanish the initial part is the constant value.
    CHECK(initial_part(f, {Rational(2), Rational(1)}) == Polynomial::constant(2, Rational(15)));
    // At the regular zero (1,1) it is the linear part of the gradient.
    Polynomial lin = initial_part(f, {Rational(1), Rational(1)});
    CHECK(lin == p2(4, 1, 0) + p2(-3, 0, 1));
    CHECK_THROWS_AS(initial_part(Polynomial(2), kOrigin), DomainMismatchError);
}

TEST_CASE("initial part is homogeneous of the germ order") {
    std::mt19937 rng(43);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_polynomial(2, 6, 1, rng);
        if (f.is_zero()) continue;
        Polynomial in = initial_part(f, kOrigin);
        GermOrder ord = order_at(f, kOrigin);
        REQUIRE(ord.finite);
        CHECK(in.order() == ord.value);
        CHECK(in.degree() == ord.value);
    }
}

TEST_CASE("directional alpha-derivative follows the order trichotomy") {
    Polynomial f = p2(1, 4, 0) + p2(-1, 0, 3);
    const std::vector<Rational> ex = {Rational(1), Rational(0)};
    const std::vector<Rational> ey = {Rational(0), Rational(1)};

    // Along e_x the restricted germ is t^4.
    auto below = alpha_directional_derivative(f, kOrigin, ex, Rational(3));
    CHECK(below.kind == DirectionalKind::Zero);
    auto at = alpha_directional_derivative(f, kOrigin, ex, Rational(4));
    CHECK(at.kind == DirectionalKind::Limit);
    CHECK(at.value == 1);
    auto above = alpha_directional_derivative(f, kOrigin, ex, Rational(5));
    CHECK(above.kind == DirectionalKind::Diverges);
    // Fractional thresholds sit strictly between.
    CHECK(alpha_directional_derivative(f, kOrigin, ex, make_rational(7, 2)).kind ==
          DirectionalKind::Zero);
    CHECK(alpha_directional_derivative(f, kOrigin, ex, make_rational(9, 2)).kind ==
          DirectionalKind::Diverges);

    // Along e_y the restricted germ is -t^3.
    auto along_y = alpha_directional_derivative(f, kOrigin, ey, Rational(3));
    CHECK(along_y.kind == DirectionalKind::Limit);
    CHECK(along_y.value == -1);

    // The zero germ relative to its own value is Zero at every alpha.
    CHECK(alpha_directional_derivative(Polynomial(2), kOrigin, ex, Rational(1)).kind ==
          DirectionalKind::Zero);
    CHECK_THROWS_AS(alpha_directional_derivative(f, kOrigin, {Rational(0), Rational(0)}, Rational(1)),
                    DomainMismatchError);
}

TEST_CASE("alpha-derivative covers every branch") {
    Polynomial f = p2(1, 4, 0) + p2(-1, 0, 3); // order 3 at the origin

    AlphaDerivative low = alpha_derivative(f, kOrigin, Rational(2));
    CHECK(low.exists);
    CHECK(low.value.is_zero());

    AlphaDerivative at = alpha_derivative(f, kOrigin, Rational(3));
    CHECK(at.exists);
    CHECK(at.value == p2(-1, 0, 3));

    AlphaDerivative frac = alpha_derivative(f, kOrigin, make_rational(7, 2));
    CHECK_FALSE(frac.exists);
    CHECK(alpha_derivative(f, kOrigin, Rational(4)).exists == false);

    // Constant germs have zero derivative at every positive alpha.
    Polynomial c = Polynomial::constant(2, Rational(5));
    CHECK(alpha_derivative(c, kOrigin, Rational(2)).exists);
    CHECK(alpha_derivative(c, kOrigin, Rational(2)).value.is_zero());

    // The zero polynomial behaves like a constant germ.
    AlphaDerivative zero = alpha_derivative(Polynomial(2), kOrigin, make_rational(1, 2));
    CHECK(zero.exists);
    CHECK(zero.value.is_zero());
}

TEST_CASE("alpha-derivative at the order equals the initial part") {
    std::mt19937 rng(47);
    const std::vector<Rational> base = {make_rational(1, 2), Rational(-1)};
    for (int i = 0; i < 20; ++i) {
        Polynomial f = random_polynomial(2, 5, 1, rng);
        if (f.is_zero()) continue;
        for (const auto& point : {kOrigin, base}) {
            GermOrder ord = order_at(f, point);
            REQUIRE(ord.finite);
            AlphaDerivative d = alpha_derivative(f, point, Rational(ord.value));
            REQUIRE(d.exists);
            CHECK(d.value == initial_part(f, point));
            if (ord.value > 0) {
                AlphaDerivative lower = alpha_derivative(f, point, Rational(ord.value) - make_rational(1, 3));
                CHECK(lower.exists);
                CHECK(lower.value.is_zero());
            }
        }
    }
}
