#pragma once

#include "singulab/polynomial.hpp"
#include "singulab/rational.hpp"

#include <memory>
#include <vector>

namespace singulab {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable scalar expression tree; the numeric carrier for maps with
// divisions, absolute values, and rational powers.  Rational powers of
// negative bases are sign-preserving when the reduced denominator is odd;
// even roots of negatives and divisions by zero raise EvalDomainError.
class Expr {
  public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Abs, Pow };

    static ExprPtr constant(Rational value);
    static ExprPtr variable(int index);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr abs(ExprPtr a);
    static ExprPtr pow(ExprPtr base, Rational exponent);

    Kind kind() const noexcept { return kind_; }
    const Rational& value() const noexcept { return value_; }       // Constant
    int index() const noexcept { return index_; }                   // Variable
    const Rational& exponent() const noexcept { return exponent_; } // Pow
    const ExprPtr& left() const noexcept { return left_; }
    const ExprPtr& right() const noexcept { return right_; }

    double evaluate(const std::vector<double>& point) const;
    bool depends_on_variables() const;
    void collect_fractional_exponents(std::vector<Rational>& out) const;
    ExprPtr substituted(const std::vector<ExprPtr>& replacements) const;

  private:
    Expr() = default;

    Kind kind_ = Kind::Constant;
    Rational value_ = Rational(0);
    int index_ = 0;
    Rational exponent_ = Rational(0);
    ExprPtr left_, right_;
};

// A map R^arity -> R^coarity as a list of component expressions.
class MapExpr {
  public:
    MapExpr() = default;
    MapExpr(int arity, std::vector<ExprPtr> components);

    static MapExpr identity(int arity);
    static MapExpr from_polynomial(const Polynomial& p);
    // outer applied after inner; requires outer.arity() == inner.coarity()
    static MapExpr compose(const MapExpr& outer, const MapExpr& inner);

    int arity() const noexcept { return arity_; }
    int coarity() const noexcept { return static_cast<int>(components_.size()); }
    const std::vector<ExprPtr>& components() const noexcept { return components_; }

    std::vector<double> evaluate(const std::vector<double>& point) const;
    // exponents of every non-integer power applied to a variable-dependent
    // base, across all components
    std::vector<Rational> fractional_exponents() const;

  private:
    int arity_ = 0;
    std::vector<ExprPtr> components_;
};

// Parseable renderings: explicit '*', '^' with parenthesized rational or
// negative exponents, abs(...) calls, '; ' between map components.
std::string to_string(const ExprPtr& expr, const std::vector<std::string>& names);
std::string to_string(const MapExpr& map, const std::vector<std::string>& names);

} // namespace singulab
