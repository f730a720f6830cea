#pragma once

#include "singulab/map_expr.hpp"
#include "singulab/polynomial.hpp"

#include <string>
#include <vector>

namespace singulab {

struct ParseDiagnostic {
    int position = 0;
    std::string message;

    bool operator==(const ParseDiagnostic&) const = default;
};

struct PolynomialParseResult {
    bool ok = false;
    Polynomial value = Polynomial(1);
    std::vector<std::string> variables;
    std::vector<ParseDiagnostic> diagnostics;
};

struct MapParseResult {
    bool ok = false;
    std::vector<ExprPtr> components;
    std::vector<std::string> variables;
    std::vector<ParseDiagnostic> diagnostics;
};

// Polynomial mode.  Exponents must be non-negative integers; rational
// coefficient literals like 3/4 are allowed, but '/' is otherwise rejected.
// Variable names must be declared up front; each must match
// [A-Za-z][A-Za-z0-9]* and be distinct, otherwise std::invalid_argument.
PolynomialParseResult parse_polynomial(const std::string& src,
                                       const std::vector<std::string>& vars);

// Map mode.  One expression per ';'-separated component.  '/' divides,
// abs(...) is available, and exponents may be rational and negative.
MapParseResult parse_map(const std::string& src, const std::vector<std::string>& vars);

// Convenience wrapper building the MapExpr from a successful parse_map call.
MapExpr make_map(const MapParseResult& result);

} // namespace singulab
