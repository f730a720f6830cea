#pragma once

#include "singulab/polynomial.hpp"
#include "singulab/standard_basis.hpp"

#include <vector>

namespace singulab {

enum class StaircaseCertificate { StaircaseClosed, MissingPurePower };

struct MilnorResult {
    bool finite = false;
    long value = 0;                            // valid when finite
    std::vector<Monomial> standard_monomials;  // present iff finite
    StaircaseCertificate certificate = StaircaseCertificate::MissingPurePower;
    int missing_variable = -1;                 // valid when MissingPurePower
};

// Real Milnor number: dimension of the local algebra modulo the Jacobian
// ideal, counted as the staircase of a standard basis.  Finiteness is
// decided structurally: every variable must show a pure power among the
// leading monomials.
MilnorResult milnor_number(const Polynomial& f, long max_steps = kDefaultMaxSteps);

bool is_algebraically_isolated(const Polynomial& f, long max_steps = kDefaultMaxSteps);

} // namespace singulab
