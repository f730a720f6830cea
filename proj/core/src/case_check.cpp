#include "singulab/case_check.hpp"

#include "singulab/errors.hpp"

#include <algorithm>

namespace singulab {

namespace {

constexpr double kRatioSpreadLimit = 1e3;

} // namespace

CaseReport check_invariance_case(const Polynomial& f, const Polynomial& g, const MapExpr& phi,
                                 const SampleCloud& cloud, long max_steps) {
    if (f.variable_count() != phi.arity() || g.variable_count() != phi.coarity())
        throw DomainMismatchError("germ and map dimensions do not line up");
    CaseReport report;
    const std::vector<Rational> origin(static_cast<std::size_t>(f.variable_count()), Rational(0));
    const std::vector<Rational> origin_g(static_cast<std::size_t>(g.variable_count()), Rational(0));
    report.ord_f = order_at(f, origin);
    report.ord_g = order_at(g, origin_g);

    MilnorResult mu_f = milnor_number(f, max_steps);
    MilnorResult mu_g = milnor_number(g, max_steps);
    report.mu_f_finite = mu_f.finite;
    report.mu_f = mu_f.value;
    report.mu_g_finite = mu_g.finite;
    report.mu_g = mu_g.value;

    report.initial_f_isolated =
        !f.is_zero() && is_algebraically_isolated(f.lowest_component(), max_steps);
    report.initial_g_isolated =
        !g.is_zero() && is_algebraically_isolated(g.lowest_component(), max_steps);

    report.equivalence = asymptotic_ratio_check(
        MapExpr::from_polynomial(f), MapExpr::compose(MapExpr::from_polynomial(g), phi), cloud);
    bool ratio_bounded = report.equivalence.sample_count > 0 && !report.equivalence.violated &&
                         report.equivalence.c_lower > 0 &&
                         report.equivalence.c_upper / report.equivalence.c_lower <= kRatioSpreadLimit;
    report.equivalence_verdict = ratio_bounded;

    report.holder = holder_exponent_estimate(phi, cloud.base, cloud);

    // hypothesis screening
    std::vector<Rational> exponents = phi.fractional_exponents();
    if (!exponents.empty()) {
        Rational lowest = *std::min_element(exponents.begin(), exponents.end());
        report.failed_hypotheses.push_back(lowest < 1 ? kHolderNotLipschitz
                                                      : kInsufficientSmoothness);
    }
    if (!report.initial_f_isolated || !report.initial_g_isolated)
        report.failed_hypotheses.push_back(kNonIsolatedInitialPart);
    if (!ratio_bounded) report.failed_hypotheses.push_back(kZeroSetOnlyEquivalence);

    bool mu_equal = (report.mu_f_finite == report.mu_g_finite) &&
                    (!report.mu_f_finite || report.mu_f == report.mu_g);
    report.theorem_consistent = mu_equal || !report.failed_hypotheses.empty();
    return report;
}

} // namespace singulab
