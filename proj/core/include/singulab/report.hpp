#pragma once

#include "singulab/case_check.hpp"
#include "singulab/polynomial.hpp"
#include "singulab/vendor/json.hpp"

#include <string>
#include <vector>

namespace singulab {

using Json = nlohmann::json;

struct SchemaIssue {
    std::string path;
    std::string message;
};

// Structural validator covering the subset of JSON Schema used by the
// checked-in report schemas: type, properties, required,
// additionalProperties, items, enum, oneOf.
std::vector<SchemaIssue> validate_against_schema(const Json& document, const Json& schema);

// One document per invocation: compact by default, two-space indent when
// pretty, always newline-terminated.
std::string render_json(const Json& document, bool pretty);

// Full germ report: order, initial part, Milnor number with certificate,
// isolatedness of the germ and of its initial part, homogeneous-formula
// inferences when they apply, optional truncation-oracle cross-check.
Json germ_report(const Polynomial& f, const std::vector<std::string>& vars,
                 const std::string& input, bool with_oracle, long max_steps, double parse_ms);

// Order and initial part only.
Json order_report(const Polynomial& f, const std::vector<std::string>& vars,
                  const std::string& input, double parse_ms);

// CaseReport serialization shared by the equiv command and the test suites.
Json case_report_json(const CaseReport& report, const std::string& f_text,
                      const std::string& g_text, const std::string& phi_text,
                      const std::vector<std::string>& vars, double parse_ms, double check_ms);

} // namespace singulab
