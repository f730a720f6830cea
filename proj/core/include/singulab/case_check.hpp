#pragma once

#include "singulab/estimators.hpp"
#include "singulab/germ.hpp"
#include "singulab/map_expr.hpp"
#include "singulab/milnor.hpp"
#include "singulab/sample_cloud.hpp"

#include <string>
#include <vector>

namespace singulab {

// Failed-hypothesis labels attached by check_invariance_case.
inline constexpr const char* kHolderNotLipschitz = "holder_not_lipschitz";
inline constexpr const char* kInsufficientSmoothness = "insufficient_smoothness_class";
inline constexpr const char* kNonIsolatedInitialPart = "non_isolated_initial_part";
inline constexpr const char* kZeroSetOnlyEquivalence = "zero_set_only_equivalence";

struct CaseReport {
    GermOrder ord_f;
    GermOrder ord_g;
    bool mu_f_finite = false;
    long mu_f = 0;
    bool mu_g_finite = false;
    long mu_g = 0;
    bool initial_f_isolated = false;
    bool initial_g_isolated = false;
    EquivReport equivalence;          // f against g composed with phi
    bool equivalence_verdict = false; // ratios bounded, no zero/nonzero mismatch
    HolderEstimate holder;            // exponent estimate for phi
    std::vector<std::string> failed_hypotheses;
    bool theorem_consistent = false;
};

// Cross-examines one candidate equivalence (f, g, phi): exact orders and
// Milnor numbers, a sampled ratio check of f versus g∘phi, and a verdict on
// whether the observations are consistent with equality of Milnor numbers
// under the stated hypotheses.  A Milnor-number mismatch is consistent
// exactly when some hypothesis fails, and the failing ones are labelled.
CaseReport check_invariance_case(const Polynomial& f, const Polynomial& g, const MapExpr& phi,
                                 const SampleCloud& cloud, long max_steps = kDefaultMaxSteps);

} // namespace singulab
