#include "singulab/report.hpp"

#include "singulab/germ.hpp"
#include "singulab/homogeneous.hpp"
#include "singulab/macaulay.hpp"
#include "singulab/milnor.hpp"

#include <chrono>

namespace singulab {

namespace {

std::string json_type_name(const Json& v) {
    if (v.is_object()) return "object";
    if (v.is_array()) return "array";
    if (v.is_string()) return "string";
    if (v.is_boolean()) return "boolean";
    if (v.is_null()) return "null";
    if (v.is_number_integer()) return "integer";
    return "number";
}

bool type_matches(const Json& v, const std::string& wanted) {
    if (wanted == "number") return v.is_number();
    if (wanted == "integer") return v.is_number_integer();
    return json_type_name(v) == wanted;
}

void check_node(const Json& value, const Json& schema, const std::string& path,
                std::vector<SchemaIssue>& issues) {
    if (schema.contains("oneOf")) {
        int matched = 0;
        for (const Json& option : schema["oneOf"]) {
            std::vector<SchemaIssue> trial;
            check_node(value, option, path, trial);
            if (trial.empty()) ++matched;
        }
        if (matched != 1)
            issues.push_back({path, "matches " + std::to_string(matched) +
                                        " subschemas of oneOf, expected exactly 1"});
        return;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const Json& candidate : schema["enum"])
            if (candidate == value) found = true;
        if (!found) issues.push_back({path, "value not in enum"});
        return;
    }
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const Json& alt : t)
                if (type_matches(value, alt.get<std::string>())) ok = true;
        }
        if (!ok) {
            issues.push_back({path, "has type " + json_type_name(value) +
                                        ", expected " + t.dump()});
            return;
        }
    }
    if (value.is_object()) {
        const Json properties = schema.value("properties", Json::object());
        for (const Json& name : schema.value("required", Json::array())) {
            if (!value.contains(name.get<std::string>()))
                issues.push_back({path, "missing required property '" + name.get<std::string>() + "'"});
        }
        const bool closed =
            schema.contains("additionalProperties") && schema["additionalProperties"] == false;
        for (const auto& [key, member] : value.items()) {
            if (properties.contains(key)) {
                check_node(member, properties[key], path + "." + key, issues);
            } else if (closed) {
                issues.push_back({path, "unknown property '" + key + "'"});
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        int i = 0;
        for (const Json& element : value) {
            check_node(element, schema["items"], path + "[" + std::to_string(i) + "]", issues);
            ++i;
        }
    }
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json order_json(const GermOrder& order) {
    return order.finite ? Json(order.value) : Json("infinite");
}

Json mu_json(bool finite, long value) { return finite ? Json(value) : Json("infinite"); }

} // namespace

std::vector<SchemaIssue> validate_against_schema(const Json& document, const Json& schema) {
    std::vector<SchemaIssue> issues;
    check_node(document, schema, "$", issues);
    return issues;
}

std::string render_json(const Json& document, bool pretty) {
    return document.dump(pretty ? 2 : -1) + "\n";
}

Json germ_report(const Polynomial& f, const std::vector<std::string>& vars,
                 const std::string& input, bool with_oracle, long max_steps, double parse_ms) {
    const std::vector<Rational> origin(static_cast<std::size_t>(f.variable_count()), Rational(0));

    Json doc;
    doc["input"] = input;
    doc["vars"] = vars;
    doc["order"] = order_json(order_at(f, origin));
    doc["initial_part"] = f.is_zero() ? "0" : initial_part(f, origin).to_string(vars);

    const auto milnor_start = Clock::now();
    MilnorResult mu = milnor_number(f, max_steps);
    const double milnor_ms = ms_since(milnor_start);

    doc["mu"] = mu_json(mu.finite, mu.value);
    doc["certificate"] = mu.certificate == StaircaseCertificate::StaircaseClosed
                             ? "staircase_closed"
                             : "missing_pure_power";
    if (mu.certificate == StaircaseCertificate::MissingPurePower && mu.missing_variable >= 0)
        doc["missing_variable"] = vars[static_cast<std::size_t>(mu.missing_variable)];
    doc["isolated"] = mu.finite;

    const bool initial_isolated =
        !f.is_zero() && is_algebraically_isolated(f.lowest_component(), max_steps);
    doc["initial_isolated"] = initial_isolated;
    if (initial_isolated) {
        doc["formula_mu"] = homogeneous_milnor_formula(f, max_steps);
        doc["determinacy_bound"] = determinacy_bound(f, max_steps);
    }

    double oracle_ms = 0.0;
    if (with_oracle) {
        const auto oracle_start = Clock::now();
        OracleResult oracle = milnor_number_oracle(f);
        oracle_ms = ms_since(oracle_start);
        doc["mu_oracle"] = oracle.conclusive ? Json(oracle.value) : Json("inconclusive");
    }

    Json timings;
    timings["parse"] = parse_ms;
    timings["milnor"] = milnor_ms;
    if (with_oracle) timings["oracle"] = oracle_ms;
    timings["total"] = parse_ms + milnor_ms + oracle_ms;
    doc["timings_ms"] = timings;
    return doc;
}

Json order_report(const Polynomial& f, const std::vector<std::string>& vars,
                  const std::string& input, double parse_ms) {
    const std::vector<Rational> origin(static_cast<std::size_t>(f.variable_count()), Rational(0));
    Json doc;
    doc["input"] = input;
    doc["vars"] = vars;
    doc["order"] = order_json(order_at(f, origin));
    doc["initial_part"] = f.is_zero() ? "0" : initial_part(f, origin).to_string(vars);
    doc["timings_ms"] = {{"parse", parse_ms}, {"total", parse_ms}};
    return doc;
}

Json case_report_json(const CaseReport& report, const std::string& f_text,
                      const std::string& g_text, const std::string& phi_text,
                      const std::vector<std::string>& vars, double parse_ms, double check_ms) {
    Json doc;
    doc["f"] = f_text;
    doc["g"] = g_text;
    doc["phi"] = phi_text;
    doc["vars"] = vars;
    doc["ord_f"] = order_json(report.ord_f);
    doc["ord_g"] = order_json(report.ord_g);
    doc["mu_f"] = mu_json(report.mu_f_finite, report.mu_f);
    doc["mu_g"] = mu_json(report.mu_g_finite, report.mu_g);
    doc["initial_f_isolated"] = report.initial_f_isolated;
    doc["initial_g_isolated"] = report.initial_g_isolated;
    doc["equivalence"] = {{"c_lower", report.equivalence.c_lower},
                          {"c_upper", report.equivalence.c_upper},
                          {"violated", report.equivalence.violated},
                          {"worst_point", report.equivalence.worst_point},
                          {"sample_count", report.equivalence.sample_count}};
    doc["equivalence_verdict"] = report.equivalence_verdict;
    doc["holder_alpha"] = report.holder.degenerate ? Json(nullptr) : Json(report.holder.value);
    doc["failed_hypotheses"] = report.failed_hypotheses;
    doc["theorem_consistent"] = report.theorem_consistent;
    doc["timings_ms"] = {{"parse", parse_ms},
                         {"check", check_ms},
                         {"total", parse_ms + check_ms}};
    return doc;
}

} // namespace singulab
