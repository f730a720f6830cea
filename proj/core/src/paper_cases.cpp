#include "singulab/paper_cases.hpp"

#include "singulab/errors.hpp"
#include "singulab/estimators.hpp"
#include "singulab/milnor.hpp"
#include "singulab/sample_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

namespace singulab {

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kX123 = {"x1", "x2", "x3"};

struct Row {
    std::string id;
    std::string description;
    Json expected;
    Json computed;
    bool pass = false;
};

struct PlannedRow {
    std::string id;
    std::function<Row()> build;
};

Polynomial term2(const Rational& c, int a, int b) {
    return Polynomial::single_term(c, Monomial({a, b}));
}

std::string encode_parameter(const Rational& t) {
    std::string out;
    for (char c : to_string(t)) {
        if (c == '/') out += '_';
        else if (c == '-') out += 'm';
        else out += c;
    }
    return out;
}

std::string cell_text(const Json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_object() && value.contains("value") && value.contains("tolerance")) {
        std::ostringstream s;
        s << value["value"].get<double>() << " +- " << value["tolerance"].get<double>();
        return s.str();
    }
    if (value.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(4) << value.get<double>();
        return s.str();
    }
    return value.dump();
}

Json expected_mu_json(bool finite, long value) {
    return finite ? Json(value) : Json("infinite");
}

// Exact golden row: compute mu and compare with the expected value.
Row mu_row(const std::string& id, const Polynomial& f, const std::vector<std::string>& vars,
           bool expect_finite, long expect_value, long max_steps) {
    Row row;
    row.id = id;
    row.expected = expected_mu_json(expect_finite, expect_value);
    row.description = "mu(" + f.to_string(vars) + ") = " + cell_text(row.expected);
    try {
        MilnorResult mu = milnor_number(f, max_steps);
        row.computed = expected_mu_json(mu.finite, mu.value);
        row.pass = mu.finite == expect_finite && (!mu.finite || mu.value == expect_value);
    } catch (const ResourceLimitError&) {
        row.computed = "resource_limit";
        row.pass = false;
    }
    return row;
}

Row order_estimate_row(unsigned seed) {
    Row row;
    row.id = "ex3.3";
    row.description = "sampled order of x/abs(x)^(1/2) at 0 is 1/2 within 0.05";
    row.expected = Json{{"value", 0.5}, {"tolerance", 0.05}};
    MapExpr half(1, {Expr::div(Expr::variable(0),
                               Expr::pow(Expr::abs(Expr::variable(0)), make_rational(1, 2)))});
    OrderEstimate estimate = estimate_order(half, {0.0}, make_sample_cloud({0.0}, 4, seed));
    if (estimate.degenerate || estimate.infinite_like) {
        row.computed = "degenerate";
        row.pass = false;
    } else {
        row.computed = estimate.value;
        row.pass = std::fabs(estimate.value - 0.5) <= 0.05;
    }
    return row;
}

Row holder_row(int k, unsigned seed) {
    const Rational alpha = make_rational(2 * k + 1, 2 * k + 3);
    MapExpr phi(2, {Expr::pow(Expr::variable(0), alpha), Expr::pow(Expr::variable(1), alpha)});
    Row row;
    row.id = "ex4.4k" + std::to_string(k) + ".holder";
    row.description = "sampled Holder exponent of (" + to_string(phi, kXY) + ") at 0 is " +
                      to_string(alpha) + " within 0.02";
    row.expected = Json{{"alpha", to_string(alpha)}, {"value", to_double(alpha)}, {"tolerance", 0.02}};
    HolderEstimate estimate =
        holder_exponent_estimate(phi, {0.0, 0.0}, make_sample_cloud({0.0, 0.0}, 8, seed));
    if (estimate.degenerate) {
        row.computed = "degenerate";
        row.pass = false;
    } else {
        row.computed = estimate.value;
        row.pass = std::fabs(estimate.value - to_double(alpha)) <= 0.02;
    }
    return row;
}

Polynomial wall_germ(int i) {
    std::vector<Term> terms = {{Rational(1), Monomial({2 * i, 0, 0})},
                               {Rational(1), Monomial({0, 2, 0})},
                               {Rational(-1), Monomial({0, 0, 2})}};
    return Polynomial::from_terms(3, terms);
}

// x^4 + y^4 + 2t(x^2 y^2 + y^6)
Polynomial bilipschitz_family(const Rational& t) {
    return term2(Rational(1), 4, 0) + term2(Rational(1), 0, 4) +
           term2(Rational(2) * t, 2, 2) + term2(Rational(2) * t, 0, 6);
}

// x^4 + 2t x^2 y^2 + y^4, the initial part of the family above
Polynomial quartic_pencil(const Rational& t) {
    return term2(Rational(1), 4, 0) + term2(Rational(2) * t, 2, 2) + term2(Rational(1), 0, 4);
}

// (x^2 + y^2)^2 + t y^(k+5)
Polynomial degenerate_family(int k, const Rational& t) {
    return term2(Rational(1), 4, 0) + term2(Rational(2), 2, 2) + term2(Rational(1), 0, 4) +
           term2(t, 0, k + 5);
}

// x^(3k+1) - y^3
Polynomial finite_smoothness_family(int k) {
    return term2(Rational(1), 3 * k + 1, 0) + term2(Rational(-1), 0, 3);
}

void add_mu_case(std::vector<PlannedRow>& plan, const std::string& id, Polynomial f,
                 std::vector<std::string> vars, bool expect_finite, long expect_value,
                 long max_steps) {
    plan.push_back({id, [=, f = std::move(f), vars = std::move(vars)]() {
                        return mu_row(id, f, vars, expect_finite, expect_value, max_steps);
                    }});
}

} // namespace

PaperCaseOutcome run_paper_cases(const PaperCaseOptions& options) {
    std::vector<PlannedRow> plan;

    const std::vector<int> family_k =
        options.k ? std::vector<int>{*options.k} : std::vector<int>{1, 2, 3};
    const std::vector<int> family_i =
        options.k ? std::vector<int>{*options.k} : std::vector<int>{1, 2, 3, 4};

    for (int i : family_i)
        add_mu_case(plan, "ex1.2i" + std::to_string(i), wall_germ(i), kX123, true, 2 * i - 1,
                    options.max_steps);

    add_mu_case(plan, "ex1.3f", term2(Rational(1), 4, 0) + term2(Rational(-1), 0, 3), kXY, true, 6,
                options.max_steps);
    add_mu_case(plan, "ex1.3g", term2(Rational(1), 0, 1), kXY, true, 0, options.max_steps);

    plan.push_back({"ex3.3", [seed = options.seed]() { return order_estimate_row(seed); }});

    for (int k : family_k) {
        const std::string base = "ex4.4k" + std::to_string(k);
        Polynomial f = term2(Rational(1), 2 * k + 1, 0) + term2(Rational(1), 0, 2 * k + 1);
        Polynomial g = term2(Rational(1), 2 * k + 3, 0) + term2(Rational(1), 0, 2 * k + 3);
        add_mu_case(plan, base + ".mu_f", std::move(f), kXY, true, 4L * k * k, options.max_steps);
        add_mu_case(plan, base + ".mu_g", std::move(g), kXY, true, 4L * (k + 1) * (k + 1),
                    options.max_steps);
        plan.push_back({base + ".holder", [k, seed = options.seed]() { return holder_row(k, seed); }});
    }

    // mu of the deformed quartic jumps exactly at |t| = 1, where four complex
    // critical points collide with the origin.
    const std::vector<Rational> grid46 =
        options.t ? std::vector<Rational>{*options.t} : std::vector<Rational>{Rational(0), Rational(1)};
    for (const Rational& t : grid46) {
        const bool jump = t == 1 || t == -1;
        add_mu_case(plan, "ex4.6t" + encode_parameter(t), bilipschitz_family(t), kXY, true,
                    jump ? 13 : 9, options.max_steps);
    }

    const std::vector<Rational> grid47 =
        options.t ? std::vector<Rational>{*options.t}
                  : std::vector<Rational>{Rational(0), make_rational(1, 4), make_rational(1, 2),
                                          make_rational(3, 4), Rational(1)};
    for (const Rational& t : grid47) {
        const bool degenerate = t == 1 || t == -1;
        add_mu_case(plan, "ex4.7t" + encode_parameter(t), quartic_pencil(t), kXY, !degenerate,
                    degenerate ? 0 : 9, options.max_steps);
    }

    if (options.t) {
        for (int k : family_k)
            add_mu_case(plan, "ex5.3k" + std::to_string(k), degenerate_family(k, *options.t), kXY,
                        *options.t != 0, 2L * (k + 5) + 1, options.max_steps);
    } else {
        add_mu_case(plan, "ex5.3t0", degenerate_family(1, Rational(0)), kXY, false, 0,
                    options.max_steps);
        for (int k : family_k)
            add_mu_case(plan, "ex5.3k" + std::to_string(k), degenerate_family(k, Rational(1)), kXY,
                        true, 2L * (k + 5) + 1, options.max_steps);
    }

    for (int k : family_k)
        add_mu_case(plan, "ex5.5k" + std::to_string(k), finite_smoothness_family(k), kXY, true,
                    6L * k, options.max_steps);

    if (!options.case_filter.empty()) {
        std::erase_if(plan, [&](const PlannedRow& row) {
            return row.id.rfind(options.case_filter, 0) != 0;
        });
    }

    PaperCaseOutcome outcome;
    if (plan.empty()) {
        outcome.unknown_case = true;
        outcome.document = Json{{"cases", Json::array()},
                                {"summary", {{"total", 0}, {"passed", 0}, {"failed", 0}}},
                                {"all_pass", false}};
        outcome.table = "no case matches '" + options.case_filter + "'\n";
        return outcome;
    }

    std::sort(plan.begin(), plan.end(),
              [](const PlannedRow& a, const PlannedRow& b) { return a.id < b.id; });

    std::vector<Row> rows;
    rows.reserve(plan.size());
    for (const PlannedRow& planned : plan) rows.push_back(planned.build());

    int passed = 0;
    Json cases = Json::array();
    std::size_t id_width = 4, expected_width = 8, computed_width = 8;
    for (const Row& row : rows) {
        if (row.pass) ++passed;
        cases.push_back(Json{{"id", row.id},
                             {"description", row.description},
                             {"expected", row.expected},
                             {"computed", row.computed},
                             {"pass", row.pass}});
        id_width = std::max(id_width, row.id.size());
        expected_width = std::max(expected_width, cell_text(row.expected).size());
        computed_width = std::max(computed_width, cell_text(row.computed).size());
    }

    const int total = static_cast<int>(rows.size());
    outcome.all_pass = passed == total;
    outcome.document = Json{
        {"cases", cases},
        {"summary", {{"total", total}, {"passed", passed}, {"failed", total - passed}}},
        {"all_pass", outcome.all_pass}};

    std::ostringstream table;
    table << std::left << std::setw(static_cast<int>(id_width) + 2) << "case"
          << std::setw(static_cast<int>(expected_width) + 2) << "expected"
          << std::setw(static_cast<int>(computed_width) + 2) << "computed"
          << "result\n";
    for (const Row& row : rows) {
        table << std::left << std::setw(static_cast<int>(id_width) + 2) << row.id
              << std::setw(static_cast<int>(expected_width) + 2) << cell_text(row.expected)
              << std::setw(static_cast<int>(computed_width) + 2) << cell_text(row.computed)
              << (row.pass ? "PASS" : "FAIL") << "\n";
    }
    table << passed << "/" << total << " cases passed\n";
    outcome.table = table.str();
    return outcome;
}

} // namespace singulab
