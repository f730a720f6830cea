#pragma once

#include "singulab/monomial.hpp"

#include <compare>
#include <string>
#include <vector>

namespace singulab {

// Local monomial order: anti-graded lexicographic.  Lower total degree is
// larger; ties are broken lexicographically on the (optionally permuted)
// exponent vector, a larger exponent winning.  Under this order 1 > x > x^2
// and the leading term of a germ sits in its lowest homogeneous component.
class LocalOrder {
  public:
    explicit LocalOrder(int variable_count);
    LocalOrder(int variable_count, std::vector<int> permutation);

    int variable_count() const noexcept { return variable_count_; }
    const std::vector<int>& permutation() const noexcept { return permutation_; }

    // strong ordering of a versus b: greater means a precedes b.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == std::strong_ordering::greater; }

    std::string describe() const;

  private:
    int variable_count_;
    std::vector<int> permutation_;
};

} // namespace singulab
