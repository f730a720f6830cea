#pragma once

#include "singulab/polynomial.hpp"
#include "singulab/rational.hpp"

#include <string>
#include <vector>

namespace singulab {

// Order of a polynomial germ: a non-negative integer, or infinite for the
// zero polynomial.
struct GermOrder {
    bool finite = true;
    int value = 0;

    static GermOrder of(int v) { return {true, v}; }
    static GermOrder infinite() { return {false, 0}; }
    bool operator==(const GermOrder&) const = default;
    std::string to_string() const;
};

enum class DirectionalKind { Zero, Limit, Diverges };

// Outcome of lim_{t->0+} (f(x0 + t v) - f(x0)) / t^alpha.
struct DirectionalDerivative {
    DirectionalKind kind = DirectionalKind::Zero;
    Rational value = Rational(0); // set when kind == Limit
};

// The alpha-derivative of a germ: either a homogeneous polynomial in the
// direction variable (possibly zero), or nonexistent.
struct AlphaDerivative {
    Rational alpha;
    bool exists = false;
    Polynomial value = Polynomial(1); // valid when exists

    static AlphaDerivative some(Rational alpha, Polynomial h);
    static AlphaDerivative none(Rational alpha, int variable_count);
};

GermOrder order_at(const Polynomial& f, const std::vector<Rational>& x0);

// Lowest homogeneous component of f(x0 + x) in centered coordinates x.
// Equals the constant f(x0) when f(x0) != 0.  Throws on the zero polynomial.
Polynomial initial_part(const Polynomial& f, const std::vector<Rational>& x0);

DirectionalDerivative alpha_directional_derivative(const Polynomial& f,
                                                   const std::vector<Rational>& x0,
                                                   const std::vector<Rational>& v,
                                                   const Rational& alpha);

AlphaDerivative alpha_derivative(const Polynomial& f, const std::vector<Rational>& x0,
                                 const Rational& alpha);

} // namespace singulab
