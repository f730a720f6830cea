#pragma once

#include "singulab/polynomial.hpp"

#include <vector>

namespace singulab {

// Finitely generated ideal of the local ring; zero generators are never stored.
struct Ideal {
    int variable_count = 0;
    std::vector<Polynomial> generators;
};

Ideal make_ideal(int variable_count, std::vector<Polynomial> generators);

// Ideal generated by the partial derivatives of f.  A constant f yields an
// empty generator list.
Ideal jacobian_ideal(const Polynomial& f);

} // namespace singulab
