#pragma once

#include "singulab/rational.hpp"
#include "singulab/report.hpp"
#include "singulab/standard_basis.hpp"

#include <optional>
#include <string>

namespace singulab {

struct PaperCaseOptions {
    std::string case_filter;           // run only ids with this prefix; empty = all
    std::optional<int> k;              // pin the family index of parametric cases
    std::optional<Rational> t;         // pin the deformation parameter of t-families
    unsigned seed = 1;                 // sampling seed for the numeric cases
    long max_steps = kDefaultMaxSteps; // standard-basis step cap
};

struct PaperCaseOutcome {
    Json document;      // validates against schemas/verify_paper.schema.json
    bool all_pass = false;
    bool unknown_case = false; // the filter matched no case id
    std::string table;         // human-readable summary, one line per case
};

// Runs the built-in verification inventory: golden Milnor numbers for the
// catalogued germ families plus the sampled order and Holder-exponent
// checks.  Cases are independent; a failing case is reported, not fatal.
PaperCaseOutcome run_paper_cases(const PaperCaseOptions& options);

} // namespace singulab
