#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singulab/case_check.hpp"
#include "singulab/errors.hpp"
#include "singulab/parser.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace singulab;

namespace {

Polynomial parse2(const std::string& text) {
    auto result = parse_polynomial(text, {"x", "y"});
    REQUIRE(result.ok);
    return result.value;
}

MapExpr parse_map2(const std::string& text) {
    auto result = parse_map(text, {"x", "y"});
    REQUIRE(result.ok);
    return make_map(result);
}

bool has_label(const CaseReport& report, const char* label) {
    return std::find(report.failed_hypotheses.begin(), report.failed_hypotheses.end(),
                     std::string(label)) != report.failed_hypotheses.end();
}

SampleCloud cloud2(unsigned seed) { return make_sample_cloud({0.0, 0.0}, 8, seed); }

} // namespace

TEST_CASE("a genuine equivalence is clean under the identity") {
    Polynomial f = parse2("x^4 + y^4");
    CaseReport report = check_invariance_case(f, f, MapExpr::identity(2), cloud2(1));
    CHECK(report.ord_f == GermOrder::of(4));
    CHECK(report.ord_g == GermOrder::of(4));
    REQUIRE(report.mu_f_finite);
    REQUIRE(report.mu_g_finite);
    CHECK(report.mu_f == 9);
    CHECK(report.mu_g == 9);
    CHECK(report.initial_f_isolated);
    CHECK(report.initial_g_isolated);
    CHECK(report.equivalence_verdict);
    CHECK(report.failed_hypotheses.empty());
    CHECK(report.theorem_consistent);
    CHECK(report.holder.value == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("non-lipschitz holder map explains a milnor jump") {
    // f = x^3 + y^3, g = x^5 + y^5, phi = (x^(3/5), y^(3/5)): g(phi(x)) = f(x).
    Polynomial f = parse2("x^3 + y^3");
    Polynomial g = parse2("x^5 + y^5");
    MapExpr phi = parse_map2("x^(3/5); y^(3/5)");
    CaseReport report = check_invariance_case(f, g, phi, cloud2(2));
    REQUIRE(report.mu_f_finite);
    REQUIRE(report.mu_g_finite);
    CHECK(report.mu_f == 4);
    CHECK(report.mu_g == 16);
    CHECK(report.initial_f_isolated);
    CHECK(report.initial_g_isolated);
    // The conjugation is exact, so the ratio stays pinned at 1.
    CHECK(report.equivalence_verdict);
    CHECK(report.equivalence.c_lower == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(report.equivalence.c_upper == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(has_label(report, kHolderNotLipschitz));
    CHECK_FALSE(has_label(report, kInsufficientSmoothness));
    CHECK_FALSE(has_label(report, kNonIsolatedInitialPart));
    CHECK(report.theorem_consistent);
    // The observed holder exponent of phi matches the construction.
    CHECK(report.holder.value == doctest::Approx(3.0 / 5.0).epsilon(0.05));
}

TEST_CASE("above-lipschitz fractional smoothness is labelled separately") {
    // phi = (x, x^(4/3) - y) is C^1 but not C^2; it links x^4 - y^3 to y.
    Polynomial f = parse2("x^4 - y^3");
    Polynomial g = parse2("y");
    MapExpr phi = parse_map2("x; x^(4/3) - y");
    CaseReport report = check_invariance_case(f, g, phi, cloud2(3));
    REQUIRE(report.mu_f_finite);
    REQUIRE(report.mu_g_finite);
    CHECK(report.mu_f == 6);
    CHECK(report.mu_g == 0);
    CHECK(has_label(report, kInsufficientSmoothness));
    CHECK_FALSE(has_label(report, kHolderNotLipschitz));
    // -y^3 is not isolated, and g(phi(x)) = x^(4/3) - y only matches f on V(f).
    CHECK(has_label(report, kNonIsolatedInitialPart));
    CHECK(has_label(report, kZeroSetOnlyEquivalence));
    CHECK_FALSE(report.equivalence_verdict);
    CHECK(report.theorem_consistent);
}

TEST_CASE("a degenerate initial part explains a jump under a bounded ratio") {
    // Inside x^4 + 2t x^2 y^2 + y^4 + 2t y^6 the member t=1 degenerates.
    Polynomial generic = parse2("x^4 + y^4");
    Polynomial special = parse2("x^4 + y^4 + 2*(x^2*y^2 + y^6)");
    CaseReport report = check_invariance_case(generic, special, MapExpr::identity(2), cloud2(4));
    REQUIRE(report.mu_f_finite);
    REQUIRE(report.mu_g_finite);
    CHECK(report.mu_f == 9);
    CHECK(report.mu_g == 13);
    CHECK(report.initial_f_isolated);
    CHECK_FALSE(report.initial_g_isolated); // (x^2 + y^2)^2 vanishes on circles
    CHECK(report.equivalence_verdict);      // the ratio is pinched near [1, 2]
    CHECK(has_label(report, kNonIsolatedInitialPart));
    CHECK(report.theorem_consistent);
}

TEST_CASE("an infinite-to-finite jump is explained the same way") {
    Polynomial degenerate = parse2("(x^2 + y^2)^2");
    Polynomial smoothed = parse2("(x^2 + y^2)^2 + y^6");
    CaseReport report = check_invariance_case(degenerate, smoothed, MapExpr::identity(2), cloud2(5));
    CHECK_FALSE(report.mu_f_finite);
    REQUIRE(report.mu_g_finite);
    CHECK(report.mu_g == 13);
    CHECK(has_label(report, kNonIsolatedInitialPart));
    CHECK(report.theorem_consistent);
}

TEST_CASE("a milnor mismatch never appears without a failed hypothesis") {
    const char* catalog[] = {"x^2 + y^2",
                             "x^3 + y^3",
                             "x^4 + y^4",
                             "x^4 - y^3",
                             "x^5 + y^5",
                             "x^4 + y^4 + 2*(x^2*y^2 + y^6)",
                             "(x^2 + y^2)^2",
                             "x^3 - y^2"};
    const MapExpr identity = MapExpr::identity(2);
    int pairs = 0;
    for (const char* f_text : catalog) {
        for (const char* g_text : catalog) {
            CAPTURE(f_text);
            CAPTURE(g_text);
            CaseReport report =
                check_invariance_case(parse2(f_text), parse2(g_text), identity, cloud2(6));
            bool mu_equal = (report.mu_f_finite == report.mu_g_finite) &&
                            (!report.mu_f_finite || report.mu_f == report.mu_g);
            if (!mu_equal) CHECK_FALSE(report.failed_hypotheses.empty());
            CHECK(report.theorem_consistent);
            ++pairs;
        }
    }
    CHECK(pairs == 64);
}

TEST_CASE("dimension mismatches are rejected up front") {
    Polynomial f = parse2("x^2 + y^2");
    auto phi3 = parse_map("x; y; x + y", {"x", "y"});
    REQUIRE(phi3.ok);
    // coarity 3 cannot feed a two-variable g
    CHECK_THROWS_AS(check_invariance_case(f, f, make_map(phi3), cloud2(7)), DomainMismatchError);
    CHECK_THROWS_AS(check_invariance_case(f, f, MapExpr::identity(3), cloud2(7)),
                    DomainMismatchError);
}
