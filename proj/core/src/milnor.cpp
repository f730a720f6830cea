#include "singulab/milnor.hpp"

#include "singulab/ideal.hpp"

#include <algorithm>

namespace singulab {

MilnorResult milnor_number(const Polynomial& f, long max_steps) {
    const int n = f.variable_count();
    MilnorResult result;
    Ideal jac = jacobian_ideal(f);
    if (jac.generators.empty()) {
        // constant germ: the quotient is the whole local ring
        result.missing_variable = 0;
        return result;
    }
    StandardBasis sb = standard_basis(jac, LocalOrder(n), max_steps);

    // box bounds: smallest pure power of each variable in the leading ideal
    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const Monomial& m : sb.leading_monomials)
        for (int i = 0; i < n; ++i)
            if (m.is_pure_power(i)) {
                int e = m.exponent(i);
                if (bound[static_cast<std::size_t>(i)] < 0 || e < bound[static_cast<std::size_t>(i)])
                    bound[static_cast<std::size_t>(i)] = e;
            }
    for (int i = 0; i < n; ++i)
        if (bound[static_cast<std::size_t>(i)] < 0) {
            result.missing_variable = i;
            return result;
        }

    // count monomials inside the box that avoid every leading monomial
    result.finite = true;
    result.certificate = StaircaseCertificate::StaircaseClosed;
    result.missing_variable = -1;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    bool box_empty = std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; });
    while (!box_empty) {
        Monomial candidate(exps);
        bool inside_ideal = std::any_of(sb.leading_monomials.begin(), sb.leading_monomials.end(),
                                        [&](const Monomial& m) { return m.divides(candidate); });
        if (!inside_ideal) result.standard_monomials.push_back(std::move(candidate));
        int i = 0;
        while (i < n && ++exps[static_cast<std::size_t>(i)] >= bound[static_cast<std::size_t>(i)]) {
            exps[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(result.standard_monomials.begin(), result.standard_monomials.end(),
              [](const Monomial& a, const Monomial& b) {
                  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
                  return a.exponents() < b.exponents();
              });
    result.value = static_cast<long>(result.standard_monomials.size());
    return result;
}

bool is_algebraically_isolated(const Polynomial& f, long max_steps) {
    return milnor_number(f, max_steps).finite;
}

} // namespace singulab
