#include "singulab/germ.hpp"

#include "singulab/errors.hpp"

#include <algorithm>

namespace singulab {

std::string GermOrder::to_string() const {
    return finite ? std::to_string(value) : std::string("infinite");
}

AlphaDerivative AlphaDerivative::some(Rational alpha, Polynomial h) {
    return {std::move(alpha), true, std::move(h)};
}

AlphaDerivative AlphaDerivative::none(Rational alpha, int variable_count) {
    return {std::move(alpha), false, Polynomial(variable_count)};
}

GermOrder order_at(const Polynomial& f, const std::vector<Rational>& x0) {
    if (f.is_zero()) return GermOrder::infinite();
    return GermOrder::of(f.shifted(x0).order());
}

Polynomial initial_part(const Polynomial& f, const std::vector<Rational>& x0) {
    if (f.is_zero()) throw DomainMismatchError("zero polynomial has no initial part");
    return f.shifted(x0).lowest_component();
}

DirectionalDerivative alpha_directional_derivative(const Polynomial& f,
                                                   const std::vector<Rational>& x0,
                                                   const std::vector<Rational>& v,
                                                   const Rational& alpha) {
    bool zero_dir = std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
    if (zero_dir) throw DomainMismatchError("zero direction");
    std::vector<Rational> coeffs = f.restricted_to_line(x0, v);
    // g(t) = f(x0 + t v) - f(x0): drop the constant coefficient
    std::size_t d = 1;
    while (d < coeffs.size() && coeffs[d] == 0) ++d;
    if (d >= coeffs.size()) return {DirectionalKind::Zero, Rational(0)};
    Rational deg(static_cast<long>(d));
    if (deg > alpha) return {DirectionalKind::Zero, Rational(0)};
    if (deg == alpha) return {DirectionalKind::Limit, coeffs[d]};
    return {DirectionalKind::Diverges, Rational(0)};
}

AlphaDerivative alpha_derivative(const Polynomial& f, const std::vector<Rational>& x0,
                                 const Rational& alpha) {
    const int n = f.variable_count();
    GermOrder m = order_at(f, x0);
    if (!m.finite) return AlphaDerivative::some(alpha, Polynomial(n));
    Rational order_value(static_cast<long>(m.value));
    if (alpha < order_value) return AlphaDerivative::some(alpha, Polynomial(n));
    if (alpha == order_value) return AlphaDerivative::some(alpha, initial_part(f, x0));
    // alpha above the order: nonexistent unless the germ is constant
    Polynomial shifted = f.shifted(x0);
    Polynomial diff = shifted - Polynomial::constant(n, shifted.evaluate(std::vector<Rational>(
                                      static_cast<std::size_t>(n), Rational(0))));
    if (diff.is_zero()) return AlphaDerivative::some(alpha, Polynomial(n));
    return AlphaDerivative::none(alpha, n);
}

} // namespace singulab
