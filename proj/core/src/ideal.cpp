#include "singulab/ideal.hpp"

#include "singulab/errors.hpp"

namespace singulab {

Ideal make_ideal(int variable_count, std::vector<Polynomial> generators) {
    Ideal ideal;
    ideal.variable_count = variable_count;
    for (Polynomial& g : generators) {
        if (g.variable_count() != variable_count)
            throw DomainMismatchError("generator variable-count mismatch");
        if (!g.is_zero()) ideal.generators.push_back(std::move(g));
    }
    return ideal;
}

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> partials;
    partials.reserve(static_cast<std::size_t>(f.variable_count()));
    for (int i = 0; i < f.variable_count(); ++i) partials.push_back(f.derivative(i));
    return make_ideal(f.variable_count(), std::move(partials));
}

} // namespace singulab
