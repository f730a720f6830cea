#include "singulab/macaulay.hpp"

#include "singulab/errors.hpp"
#include "singulab/ideal.hpp"

#include <map>
#include <vector>

namespace singulab {

namespace {

// exponent vectors of total degree < limit, ordered by degree then lex
void monomials_below(int variable_count, int limit, std::vector<int>& scratch, int position,
                     int remaining, std::vector<std::vector<int>>& out) {
    if (position == variable_count) {
        out.push_back(scratch);
        return;
    }
    for (int e = 0; e < remaining; ++e) {
        scratch[static_cast<std::size_t>(position)] = e;
        monomials_below(variable_count, limit, scratch, position + 1, remaining - e, out);
    }
}

std::vector<std::vector<int>> monomials_below(int variable_count, int limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> scratch(static_cast<std::size_t>(variable_count), 0);
    monomials_below(variable_count, limit, scratch, 0, limit, out);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

using SparseRow = std::map<int, Rational>;

} // namespace

long truncated_quotient_dimension(const Polynomial& f, int truncation_degree) {
    if (truncation_degree < 1) throw DomainMismatchError("truncation degree must be positive");
    const int n = f.variable_count();
    std::vector<std::vector<int>> columns = monomials_below(n, truncation_degree);
    std::map<std::vector<int>, int> column_index;
    for (std::size_t i = 0; i < columns.size(); ++i)
        column_index[columns[i]] = static_cast<int>(i);

    std::map<int, SparseRow> pivots;
    auto insert_row = [&](SparseRow row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto hit = pivots.find(lead->first);
            if (hit == pivots.end()) {
                Rational scale = Rational(1) / lead->second;
                for (auto& [col, value] : row) value *= scale;
                pivots.emplace(lead->first, std::move(row));
                return;
            }
            Rational factor = lead->second;
            for (const auto& [col, value] : hit->second) {
                auto it = row.find(col);
                Rational updated = (it == row.end() ? Rational(0) : it->second) - factor * value;
                if (updated == 0) {
                    if (it != row.end()) row.erase(it);
                } else if (it == row.end()) {
                    row.emplace(col, std::move(updated));
                } else {
                    it->second = std::move(updated);
                }
            }
        }
    };

    for (const Polynomial& partial : jacobian_ideal(f).generators) {
        int shift_limit = truncation_degree - partial.order();
        for (const std::vector<int>& beta : monomials_below(n, shift_limit)) {
            SparseRow row;
            Monomial shift(beta);
            for (const Term& t : partial.terms()) {
                Monomial product = t.mono * shift;
                if (product.total_degree() >= truncation_degree) continue;
                auto it = row.emplace(column_index.at(product.exponents()), Rational(0)).first;
                it->second += t.coeff;
                if (it->second == 0) row.erase(it);
            }
            if (!row.empty()) insert_row(std::move(row));
        }
    }
    return static_cast<long>(columns.size()) - static_cast<long>(pivots.size());
}

OracleResult milnor_number_oracle(const Polynomial& f, int d_max, int window) {
    if (window < 2) throw DomainMismatchError("stabilization window must be at least 2");
    OracleResult result;
    for (int d = 1; d <= d_max; ++d) {
        result.dimensions.push_back(truncated_quotient_dimension(f, d));
        if (static_cast<int>(result.dimensions.size()) < window) continue;
        bool stable = true;
        for (int back = 1; back < window; ++back)
            if (result.dimensions[result.dimensions.size() - 1 - static_cast<std::size_t>(back)] !=
                result.dimensions.back())
                stable = false;
        if (stable) {
            result.conclusive = true;
            result.value = result.dimensions.back();
            return result;
        }
    }
    return result;
}

} // namespace singulab
