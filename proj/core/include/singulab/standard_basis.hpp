#pragma once

#include "singulab/ideal.hpp"
#include "singulab/local_order.hpp"
#include "singulab/polynomial.hpp"

#include <vector>

namespace singulab {

inline constexpr long kDefaultMaxSteps = 1'000'000;

struct StandardBasis {
    LocalOrder order;
    std::vector<Polynomial> elements;
    std::vector<Monomial> leading_monomials;
};

// Mora's weak normal form with the écart strategy, followed by tail
// reduction, so no monomial of the result is divisible by a basis leading
// monomial.  Reduction steps count against max_steps; exceeding the cap
// raises ResourceLimitError rather than returning a truncated answer.
// Divisor choice: minimal écart, ties broken by lowest list index.
Polynomial mora_normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                            const LocalOrder& order, long max_steps = kDefaultMaxSteps);

// Tangent-cone algorithm (Buchberger loop over Mora weak normal forms).
// Pair selection: minimal lcm total degree, then lowest index pair; pairs
// with coprime leading monomials are discarded.  The returned basis is
// minimal: no leading monomial divides another.
StandardBasis standard_basis(const Ideal& ideal, const LocalOrder& order,
                             long max_steps = kDefaultMaxSteps);

} // namespace singulab
