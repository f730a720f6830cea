#include "singulab/monomial.hpp"

#include "singulab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace singulab {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty())
        throw DomainMismatchError("monomial needs at least one variable");
    for (int e : exponents_)
        if (e < 0) throw DomainMismatchError("negative exponent in monomial");
}

Monomial Monomial::one(int variable_count) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(variable_count), 0));
}

Monomial Monomial::variable(int variable_count, int index) {
    std::vector<int> e(static_cast<std::size_t>(variable_count), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return Monomial(std::move(e));
}

int Monomial::total_degree() const noexcept {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_pure_power(int index) const {
    for (int i = 0; i < variable_count(); ++i)
        if (i != index && exponents_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    if (variable_count() != other.variable_count())
        throw DomainMismatchError("monomial variable-count mismatch");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
    if (!divides(numerator))
        throw DomainMismatchError("monomial quotient of a non-multiple");
    std::vector<int> e(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        e[i] = numerator.exponents_[i] - exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (variable_count() != other.variable_count())
        throw DomainMismatchError("monomial variable-count mismatch");
    std::vector<int> e(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        e[i] = exponents_[i] + other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.variable_count() != b.variable_count())
        throw DomainMismatchError("monomial variable-count mismatch");
    std::vector<int> e(a.exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponents_[i], b.exponents_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    if (a.variable_count() != b.variable_count())
        throw DomainMismatchError("monomial variable-count mismatch");
    for (std::size_t i = 0; i < a.exponents_.size(); ++i)
        if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
    return true;
}

} // namespace singulab
