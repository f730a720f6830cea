#pragma once

#include "singulab/local_order.hpp"
#include "singulab/monomial.hpp"
#include "singulab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace singulab {

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term&) const = default;
};

// Multivariate polynomial over Q.  Terms are kept in canonical descending
// order under the identity anti-graded lex order, so terms().front() is the
// leading term of the germ at the origin (lowest total degree wins).
class Polynomial {
  public:
    explicit Polynomial(int variable_count);
    static Polynomial constant(int variable_count, const Rational& value);
    static Polynomial variable(int variable_count, int index);
    static Polynomial single_term(const Rational& coeff, Monomial mono);
    static Polynomial from_terms(int variable_count, const std::vector<Term>& terms);

    int variable_count() const noexcept { return variable_count_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int term_count() const noexcept { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    const Term& leading_term() const;                       // throws on zero
    const Term& leading_term(const LocalOrder& order) const;

    int order() const;   // minimal total degree among terms; throws on zero
    int degree() const;  // maximal total degree among terms; throws on zero

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    bool operator==(const Polynomial&) const = default;

    Polynomial scaled(const Rational& factor) const;
    Polynomial times_term(const Rational& coeff, const Monomial& mono) const;

    Polynomial derivative(int index) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;

    // f(x + point), exact Taylor shift
    Polynomial shifted(const std::vector<Rational>& point) const;
    // f(M x) for a square matrix of rationals, rows indexed by original variables
    Polynomial composed_linear(const std::vector<std::vector<Rational>>& matrix) const;
    // coefficients of t^k in f(base + t * direction)
    std::vector<Rational> restricted_to_line(const std::vector<Rational>& base,
                                             const std::vector<Rational>& direction) const;

    Polynomial homogeneous_component(int degree) const;
    Polynomial lowest_component() const;  // throws on zero
    Polynomial jet(int k) const;          // drop all terms of total degree > k

    // associated primitive polynomial: coprime integer coefficients, leading
    // coefficient positive
    Polynomial primitive() const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    using ExpMap = std::map<std::vector<int>, Rational>;

    static Polynomial from_map(int variable_count, const ExpMap& map);
    void check_same_vars(const Polynomial& other) const;

    int variable_count_;
    std::vector<Term> terms_;
};

} // namespace singulab
