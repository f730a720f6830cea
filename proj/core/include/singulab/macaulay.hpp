#pragma once

#include "singulab/polynomial.hpp"

#include <vector>

namespace singulab {

// Brute-force cross-check of the Milnor number, independent of standard
// bases: exact row reduction of the Macaulay matrix of the Jacobian ideal
// truncated below a given total degree.
long truncated_quotient_dimension(const Polynomial& f, int truncation_degree);

struct OracleResult {
    bool conclusive = false;
    long value = 0;               // valid when conclusive
    std::vector<long> dimensions; // truncated dimensions for D = 1, 2, ...
};

// Runs truncated_quotient_dimension for growing D and reports the shared
// value once `window` consecutive dimensions agree; INCONCLUSIVE (not
// conclusive) when no plateau appears by d_max.
OracleResult milnor_number_oracle(const Polynomial& f, int d_max = 20, int window = 3);

} // namespace singulab
