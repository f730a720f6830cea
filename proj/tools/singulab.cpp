#include "singulab/case_check.hpp"
#include "singulab/errors.hpp"
#include "singulab/paper_cases.hpp"
#include "singulab/parser.hpp"
#include "singulab/report.hpp"
#include "singulab/sample_cloud.hpp"
#include "singulab/standard_basis.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using singulab::Json;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
    }
    return out;
}

// The machine contract: exactly one JSON document on stdout per invocation,
// errors included; human diagnostics go to stderr.
int emit_error(const std::string& kind, const std::string& message, int exit_code, bool pretty,
               std::optional<int> position = std::nullopt) {
    Json doc;
    doc["error"] = {{"kind", kind}, {"message", message}};
    if (position) doc["error"]["position"] = *position;
    std::cout << singulab::render_json(doc, pretty);
    std::cerr << "error: " << message << "\n";
    return exit_code;
}

int run_compute(const std::string& vars_csv, const std::string& poly_text, bool with_oracle,
                long max_steps, bool pretty, bool order_only) {
    const std::vector<std::string> vars = split_csv(vars_csv);
    const auto parse_start = Clock::now();
    const singulab::PolynomialParseResult parsed = singulab::parse_polynomial(poly_text, vars);
    const double parse_ms = ms_since(parse_start);
    if (!parsed.ok) {
        const singulab::ParseDiagnostic& d = parsed.diagnostics.front();
        return emit_error("parse", d.message, 2, pretty, d.position);
    }
    const Json doc = order_only
                         ? singulab::order_report(parsed.value, vars, poly_text, parse_ms)
                         : singulab::germ_report(parsed.value, vars, poly_text, with_oracle,
                                                 max_steps, parse_ms);
    std::cout << singulab::render_json(doc, pretty);
    return 0;
}

int run_verify_paper(const singulab::PaperCaseOptions& options, bool pretty) {
    const singulab::PaperCaseOutcome outcome = singulab::run_paper_cases(options);
    if (outcome.unknown_case)
        return emit_error("unknown_case", "no case matches '" + options.case_filter + "'", 1,
                          pretty);
    std::cerr << outcome.table;
    std::cout << singulab::render_json(outcome.document, pretty);
    return outcome.all_pass ? 0 : 1;
}

int run_equiv(const std::string& vars_csv, const std::string& f_text, const std::string& g_text,
              const std::string& phi_text, int samples, unsigned seed, double radius_min,
              double radius_max, long max_steps, bool pretty) {
    const std::vector<std::string> vars = split_csv(vars_csv);
    const auto parse_start = Clock::now();
    const singulab::PolynomialParseResult f = singulab::parse_polynomial(f_text, vars);
    if (!f.ok)
        return emit_error("parse", "--f: " + f.diagnostics.front().message, 2, pretty,
                          f.diagnostics.front().position);
    const singulab::PolynomialParseResult g = singulab::parse_polynomial(g_text, vars);
    if (!g.ok)
        return emit_error("parse", "--g: " + g.diagnostics.front().message, 2, pretty,
                          g.diagnostics.front().position);
    const singulab::MapParseResult phi = singulab::parse_map(phi_text, vars);
    if (!phi.ok)
        return emit_error("parse", "--phi: " + phi.diagnostics.front().message, 2, pretty,
                          phi.diagnostics.front().position);
    const double parse_ms = ms_since(parse_start);

    const std::vector<double> origin(vars.size(), 0.0);
    const singulab::SampleCloud cloud =
        singulab::make_sample_cloud(origin, samples, seed, radius_max, radius_min);

    const auto check_start = Clock::now();
    const singulab::CaseReport report =
        singulab::check_invariance_case(f.value, g.value, singulab::make_map(phi), cloud, max_steps);
    const double check_ms = ms_since(check_start);

    std::cout << singulab::render_json(
        singulab::case_report_json(report, f_text, g_text, phi_text, vars, parse_ms, check_ms),
        pretty);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"singulab: singularity invariants of polynomial function-germs"};
    app.require_subcommand(1);

    bool pretty = false;
    long max_steps = singulab::kDefaultMaxSteps;
    std::string vars_csv = "x,y";
    std::string poly_text, f_text, g_text, phi_text;
    bool with_oracle = false;
    std::string case_filter, t_text;
    int family_k = 0;
    int samples = 8;
    unsigned seed = 1;
    double radius_min = 0x1p-24;
    double radius_max = 0x1p-4;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", pretty, "pretty-print the JSON document (two-space indent)");
        cmd->add_option("--max-steps", max_steps,
                        "standard-basis reduction step cap (default 10^6)")
            ->envname("SINGULAB_MAX_STEPS");
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "order, initial part, and Milnor number of a polynomial germ at 0");
    compute->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    compute->add_option("--poly", poly_text, "polynomial expression")->required();
    compute->add_flag("--oracle", with_oracle,
                      "cross-check mu against the Macaulay truncation oracle");
    add_common(compute);

    CLI::App* order = app.add_subcommand("order", "order and initial part of a polynomial germ at 0");
    order->add_option("--vars", vars_csv, "comma-separated variable names")->required();
    order->add_option("--poly", poly_text, "polynomial expression")->required();
    add_common(order);

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the built-in verification inventory of golden cases");
    verify->add_option("--case", case_filter, "run only case ids with this prefix");
    verify->add_option("--k", family_k, "pin the family index of parametric cases")
        ->check(CLI::PositiveNumber);
    verify->add_option("--t", t_text, "pin the deformation parameter (rational p/q)");
    verify->add_option("--seed", seed, "sampling seed for the numeric cases");
    add_common(verify);

    CLI::App* equiv = app.add_subcommand(
        "equiv", "cross-examine a candidate equivalence f ~ g o phi near 0");
    equiv->add_option("--f", f_text, "source germ (polynomial mode)")->required();
    equiv->add_option("--g", g_text, "target germ (polynomial mode)")->required();
    equiv->add_option("--phi", phi_text, "candidate map, ';'-separated components (map mode)")
        ->required();
    equiv->add_option("--vars", vars_csv, "comma-separated variable names (default x,y)");
    equiv->add_option("--samples", samples, "number of sample directions")
        ->check(CLI::PositiveNumber);
    equiv->add_option("--seed", seed, "sampling seed");
    equiv->add_option("--radius-min", radius_min, "smallest sampling radius");
    equiv->add_option("--radius-max", radius_max, "largest sampling radius");
    add_common(equiv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code == 0) return 0; // --help and --version
        Json doc;
        doc["error"] = {{"kind", "usage"}, {"message", e.what()}};
        std::cout << singulab::render_json(doc, pretty);
        return 2;
    }

    try {
        if (compute->parsed())
            return run_compute(vars_csv, poly_text, with_oracle, max_steps, pretty, false);
        if (order->parsed())
            return run_compute(vars_csv, poly_text, false, max_steps, pretty, true);
        if (verify->parsed()) {
            singulab::PaperCaseOptions options;
            options.case_filter = case_filter;
            if (verify->count("--k") > 0) options.k = family_k;
            if (verify->count("--t") > 0) options.t = singulab::rational_from_string(t_text);
            options.seed = seed;
            options.max_steps = max_steps;
            return run_verify_paper(options, pretty);
        }
        return run_equiv(vars_csv, f_text, g_text, phi_text, samples, seed, radius_min,
                         radius_max, max_steps, pretty);
    } catch (const singulab::ResourceLimitError& e) {
        return emit_error("resource_limit", e.what(), 3, pretty);
    } catch (const singulab::EvalDomainError& e) {
        return emit_error("eval_domain", e.what(), 1, pretty);
    } catch (const std::invalid_argument& e) {
        return emit_error("usage", e.what(), 2, pretty);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), 1, pretty);
    }
}
