#include "singulab/local_order.hpp"

#include "singulab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace singulab {

LocalOrder::LocalOrder(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 1)
        throw DomainMismatchError("order needs at least one variable");
    permutation_.resize(static_cast<std::size_t>(variable_count));
    std::iota(permutation_.begin(), permutation_.end(), 0);
}

LocalOrder::LocalOrder(int variable_count, std::vector<int> permutation)
    : variable_count_(variable_count), permutation_(std::move(permutation)) {
    if (variable_count < 1)
        throw DomainMismatchError("order needs at least one variable");
    if (static_cast<int>(permutation_.size()) != variable_count)
        throw DomainMismatchError("permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(variable_count), false);
    for (int p : permutation_) {
        if (p < 0 || p >= variable_count || seen[static_cast<std::size_t>(p)])
            throw DomainMismatchError("invalid variable permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

std::strong_ordering LocalOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.variable_count() != variable_count_ || b.variable_count() != variable_count_)
        throw DomainMismatchError("monomial does not match order's variable count");
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? std::strong_ordering::greater : std::strong_ordering::less;
    for (int p : permutation_) {
        int ea = a.exponent(p), eb = b.exponent(p);
        if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string LocalOrder::describe() const {
    std::ostringstream out;
    out << "anti-graded lex on " << variable_count_ << " variables, priority (";
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
        if (i) out << ' ';
        out << permutation_[i];
    }
    out << ')';
    return out.str();
}

} // namespace singulab
