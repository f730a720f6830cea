#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace singulab {

/// Power product x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
/// The ambient variable count is the vector length (n >= 1); the total
/// degree is always recomputed from the entries.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    /// The constant monomial 1 in n variables.
    static Monomial one(int variable_count);
    /// x_i (0-based) in n variables.
    static Monomial variable(int variable_count, int index);

    int variable_count() const noexcept { return static_cast<int>(exponents_.size()); }
    int exponent(int index) const { return exponents_.at(static_cast<std::size_t>(index)); }
    const std::vector<int>& exponents() const noexcept { return exponents_; }

    int total_degree() const noexcept;
    bool is_constant() const noexcept { return total_degree() == 0; }
    /// True iff all exponent weight sits on a single variable (or none).
    bool is_pure_power(int index) const;

    bool divides(const Monomial& other) const;
    /// Quotient other/this, valid only when divides(other).
    Monomial quotient_of(const Monomial& numerator) const;

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    /// True iff the supports are disjoint (gcd = 1).
    static bool coprime(const Monomial& a, const Monomial& b);

private:
    std::vector<int> exponents_;
};

} // namespace singulab
