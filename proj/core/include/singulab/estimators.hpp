#pragma once

#include "singulab/map_expr.hpp"
#include "singulab/sample_cloud.hpp"

#include <vector>

namespace singulab {

struct OrderEstimate {
    bool infinite_like = false; // every usable sample vanished
    bool degenerate = false;    // too few usable samples to regress
    double value = 0.0;         // minimal slope across directions
    double confidence = 0.0;    // two standard errors of that slope
};

struct EquivReport {
    double c_lower = 0.0;
    double c_upper = 0.0;
    bool violated = false;
    std::vector<double> worst_point;
    int sample_count = 0;
};

struct HolderEstimate {
    bool degenerate = false;
    double value = 0.0;
};

struct PseudoLipschitzEntry {
    long j = 0;
    bool ok = false;           // evaluation succeeded at this j
    std::vector<double> value; // j * (phi(x + v/j) - phi(x))
};

struct PseudoLipschitzReport {
    std::vector<PseudoLipschitzEntry> entries;
    double cauchy_tail = 0.0; // max pairwise distance over the last 3 usable entries
};

struct RankCheckPoint {
    std::vector<double> point;
    bool ok = false; // Jacobians estimated without domain errors
    int rank_f = 0;
    int rank_g_at_phi = 0;
    bool kernels_match = false;
};

// Least-squares slope of log||F(x0 + t v) - F(x0)|| against log t, per
// direction; reports the minimal slope.  When F is undefined at x0 itself
// the germ convention F(x0) = 0 is used.
OrderEstimate estimate_order(const MapExpr& F, const std::vector<double>& x0,
                             const SampleCloud& cloud);

// min/max of ||G(x)|| / ||F(x)|| over the cloud; a sample with exactly one
// of the two norms below 1e-13 marks the pair as violated.
EquivReport asymptotic_ratio_check(const MapExpr& F, const MapExpr& G, const SampleCloud& cloud);

// Median over direction pairs of the per-pair slope of
// log||phi(x) - phi(y)|| against log||x - y|| at shrinking radii.
HolderEstimate holder_exponent_estimate(const MapExpr& phi, const std::vector<double>& x0,
                                        const SampleCloud& cloud);

// The rescalings j(phi(x + v/j) - phi(x)) for each j in j_list (strictly
// increasing, positive), with a Cauchy-tail convergence diagnostic.
PseudoLipschitzReport pseudo_lipschitz_derivative_estimate(const MapExpr& phi,
                                                           const std::vector<double>& x,
                                                           const std::vector<double>& v,
                                                           const std::vector<long>& j_list);

// Central-difference Jacobian, step 1e-6; coarity x arity, row-major.
std::vector<std::vector<double>> numeric_jacobian(const MapExpr& F, const std::vector<double>& x);

// Per-point rank comparison of DF at x and DG at phi(x) with singular values
// thresholded at 1e-8 relative, plus a kernel transport check through the
// numeric Jacobian of phi.
std::vector<RankCheckPoint> rank_and_singular_check(const MapExpr& F, const MapExpr& G,
                                                    const MapExpr& phi,
                                                    const std::vector<std::vector<double>>& points);

} // namespace singulab
