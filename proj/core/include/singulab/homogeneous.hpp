#pragma once

#include "singulab/polynomial.hpp"
#include "singulab/standard_basis.hpp"

#include <vector>

namespace singulab {

struct HomogeneityReport {
    bool is_homogeneous = false;
    int degree = 0; // valid when is_homogeneous
    bool initial_isolated = false;
};

// g decomposed into graded parts starting at its order m; parts[i] is the
// degree m+i component and their sum is g.
struct RescaledFamily {
    Polynomial base = Polynomial(1);
    int m = 0;
    std::vector<Polynomial> parts;
};

struct GradientScanReport {
    bool ok = false;
    double min_gradient_norm = 0.0;
    bool has_witness = false;
    std::vector<double> witness; // sample point realizing a near-zero gradient
    double witness_t = 0.0;
};

struct FormulaCheck {
    bool exact_finite = false;
    long mu_exact = 0; // valid when exact_finite
    long mu_formula = 0;
    bool agree = false;
};

HomogeneityReport analyze_homogeneity(const Polynomial& f, long max_steps = kDefaultMaxSteps);

// (order - 1)^n, valid only when the initial part of f at the origin is
// algebraically isolated; throws NotIsolatedError otherwise.
long homogeneous_milnor_formula(const Polynomial& f, long max_steps = kDefaultMaxSteps);

// (order - 1)^n + 1, same precondition as homogeneous_milnor_formula.
long determinacy_bound(const Polynomial& f, long max_steps = kDefaultMaxSteps);

Polynomial jet(const Polynomial& f, int k);

RescaledFamily make_rescaled_family(const Polynomial& g); // throws on zero g

// g_m + sum_i t^i g_{m+i}; the t = 0 member is g_m itself.
Polynomial rescaled_member(const RescaledFamily& fam, const Rational& t);

// Advisory numeric scan: minimum of |grad h_t| over a quasi-uniform sample
// of the radius-eps sphere and a grid of t in (0, t0].  Requires the initial
// part of the base germ to be algebraically isolated.
GradientScanReport gradient_nonvanishing_scan(const RescaledFamily& fam, const Rational& t0,
                                              double eps, int samples, unsigned seed = 1,
                                              long max_steps = kDefaultMaxSteps);

FormulaCheck verify_milnor_equals_formula(const Polynomial& f, long max_steps = kDefaultMaxSteps);

} // namespace singulab
