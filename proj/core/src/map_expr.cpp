#include "singulab/map_expr.hpp"

#include "singulab/errors.hpp"

#include <cmath>

namespace singulab {

namespace {

void require(const ExprPtr& p) {
    if (!p) throw DomainMismatchError("null expression operand");
}

} // namespace

ExprPtr Expr::constant(Rational value) {
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Constant;
    node->value_ = std::move(value);
    return node;
}

ExprPtr Expr::variable(int index) {
    if (index < 0) throw DomainMismatchError("negative variable index");
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Variable;
    node->index_ = index;
    return node;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Add;
    node->left_ = std::move(a);
    node->right_ = std::move(b);
    return node;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Sub;
    node->left_ = std::move(a);
    node->right_ = std::move(b);
    return node;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Mul;
    node->left_ = std::move(a);
    node->right_ = std::move(b);
    return node;
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
    require(a), require(b);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Div;
    node->left_ = std::move(a);
    node->right_ = std::move(b);
    return node;
}

ExprPtr Expr::neg(ExprPtr a) {
    require(a);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Neg;
    node->left_ = std::move(a);
    return node;
}

ExprPtr Expr::abs(ExprPtr a) {
    require(a);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Abs;
    node->left_ = std::move(a);
    return node;
}

ExprPtr Expr::pow(ExprPtr base, Rational exponent) {
    require(base);
    auto node = std::shared_ptr<Expr>(new Expr());
    node->kind_ = Kind::Pow;
    node->left_ = std::move(base);
    node->exponent_ = std::move(exponent);
    return node;
}

double Expr::evaluate(const std::vector<double>& point) const {
    switch (kind_) {
    case Kind::Constant: return to_double(value_);
    case Kind::Variable:
        if (index_ >= static_cast<int>(point.size()))
            throw DomainMismatchError("evaluation point dimension mismatch");
        return point[static_cast<std::size_t>(index_)];
    case Kind::Add: return left_->evaluate(point) + right_->evaluate(point);
    case Kind::Sub: return left_->evaluate(point) - right_->evaluate(point);
    case Kind::Mul: return left_->evaluate(point) * right_->evaluate(point);
    case Kind::Div: {
        double den = right_->evaluate(point);
        if (den == 0.0) throw EvalDomainError("division by zero");
        return left_->evaluate(point) / den;
    }
    case Kind::Neg: return -left_->evaluate(point);
    case Kind::Abs: return std::fabs(left_->evaluate(point));
    case Kind::Pow: {
        double base = left_->evaluate(point);
        double e = to_double(exponent_);
        if (base > 0.0) return std::pow(base, e);
        if (base == 0.0) {
            if (exponent_ > 0) return 0.0;
            if (exponent_ == 0) return 1.0;
            throw EvalDomainError("zero raised to a negative power");
        }
        // negative base: sign-preserving root for odd reduced denominators
        if (mpz_odd_p(exponent_.get_den().get_mpz_t())) {
            double magnitude = std::pow(-base, e);
            bool odd_numerator = mpz_odd_p(exponent_.get_num().get_mpz_t()) != 0;
            return odd_numerator ? -magnitude : magnitude;
        }
        throw EvalDomainError("even root of a negative value");
    }
    }
    throw DomainMismatchError("corrupt expression node");
}

bool Expr::depends_on_variables() const {
    switch (kind_) {
    case Kind::Constant: return false;
    case Kind::Variable: return true;
    default:
        if (left_ && left_->depends_on_variables()) return true;
        return right_ && right_->depends_on_variables();
    }
}

void Expr::collect_fractional_exponents(std::vector<Rational>& out) const {
    if (kind_ == Kind::Pow && exponent_.get_den() != 1 && left_->depends_on_variables())
        out.push_back(exponent_);
    if (left_) left_->collect_fractional_exponents(out);
    if (right_) right_->collect_fractional_exponents(out);
}

ExprPtr Expr::substituted(const std::vector<ExprPtr>& replacements) const {
    switch (kind_) {
    case Kind::Constant: return constant(value_);
    case Kind::Variable:
        if (index_ >= static_cast<int>(replacements.size()))
            throw DomainMismatchError("substitution arity mismatch");
        return replacements[static_cast<std::size_t>(index_)];
    case Kind::Add: return add(left_->substituted(replacements), right_->substituted(replacements));
    case Kind::Sub: return sub(left_->substituted(replacements), right_->substituted(replacements));
    case Kind::Mul: return mul(left_->substituted(replacements), right_->substituted(replacements));
    case Kind::Div: return div(left_->substituted(replacements), right_->substituted(replacements));
    case Kind::Neg: return neg(left_->substituted(replacements));
    case Kind::Abs: return abs(left_->substituted(replacements));
    case Kind::Pow: return pow(left_->substituted(replacements), exponent_);
    }
    throw DomainMismatchError("corrupt expression node");
}

MapExpr::MapExpr(int arity, std::vector<ExprPtr> components)
    : arity_(arity), components_(std::move(components)) {
    if (arity < 0) throw DomainMismatchError("negative arity");
    for (const ExprPtr& c : components_) require(c);
}

MapExpr MapExpr::identity(int arity) {
    std::vector<ExprPtr> components;
    components.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) components.push_back(Expr::variable(i));
    return MapExpr(arity, std::move(components));
}

MapExpr MapExpr::from_polynomial(const Polynomial& p) {
    ExprPtr sum;
    for (const Term& t : p.terms()) {
        ExprPtr product = Expr::constant(t.coeff);
        for (int i = 0; i < p.variable_count(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            ExprPtr factor = e == 1 ? Expr::variable(i)
                                    : Expr::pow(Expr::variable(i), Rational(e));
            product = Expr::mul(std::move(product), std::move(factor));
        }
        sum = sum ? Expr::add(std::move(sum), std::move(product)) : std::move(product);
    }
    if (!sum) sum = Expr::constant(Rational(0));
    return MapExpr(p.variable_count(), {std::move(sum)});
}

MapExpr MapExpr::compose(const MapExpr& outer, const MapExpr& inner) {
    if (outer.arity() != inner.coarity())
        throw DomainMismatchError("composition arity mismatch");
    std::vector<ExprPtr> components;
    components.reserve(outer.components_.size());
    for (const ExprPtr& c : outer.components_)
        components.push_back(c->substituted(inner.components_));
    return MapExpr(inner.arity(), std::move(components));
}

std::vector<double> MapExpr::evaluate(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw DomainMismatchError("evaluation point dimension mismatch");
    std::vector<double> out;
    out.reserve(components_.size());
    for (const ExprPtr& c : components_) out.push_back(c->evaluate(point));
    return out;
}

std::vector<Rational> MapExpr::fractional_exponents() const {
    std::vector<Rational> out;
    for (const ExprPtr& c : components_) c->collect_fractional_exponents(out);
    return out;
}

namespace {

// Rendering precedence; a node is parenthesized when its level is below the
// level its context requires.  Constants rate by how they print: fractions
// contain '/', negatives contain a sign.
int render_precedence(const Expr& node) {
    switch (node.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Neg: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Pow: return 3;
    case Expr::Kind::Variable:
    case Expr::Kind::Abs: return 4;
    case Expr::Kind::Constant:
        if (node.value() < 0) return 1;
        return is_integer(node.value()) ? 4 : 2;
    }
    return 4;
}

std::string render(const ExprPtr& expr, const std::vector<std::string>& names, int parent) {
    require(expr);
    std::string out;
    switch (expr->kind()) {
    case Expr::Kind::Constant: out = to_string(expr->value()); break;
    case Expr::Kind::Variable: {
        if (expr->index() >= static_cast<int>(names.size()))
            throw DomainMismatchError("variable index outside the name list");
        out = names[static_cast<std::size_t>(expr->index())];
        break;
    }
    case Expr::Kind::Add:
        out = render(expr->left(), names, 1) + " + " + render(expr->right(), names, 2);
        break;
    case Expr::Kind::Sub:
        out = render(expr->left(), names, 1) + " - " + render(expr->right(), names, 2);
        break;
    case Expr::Kind::Mul:
        out = render(expr->left(), names, 2) + "*" + render(expr->right(), names, 3);
        break;
    case Expr::Kind::Div:
        out = render(expr->left(), names, 2) + "/" + render(expr->right(), names, 3);
        break;
    case Expr::Kind::Neg: out = "-" + render(expr->left(), names, 2); break;
    case Expr::Kind::Abs: out = "abs(" + render(expr->left(), names, 1) + ")"; break;
    case Expr::Kind::Pow: {
        const Rational& e = expr->exponent();
        std::string shown = to_string(e);
        if (!is_integer(e) || e < 0) shown = "(" + shown + ")";
        out = render(expr->left(), names, 4) + "^" + shown;
        break;
    }
    }
    if (render_precedence(*expr) < parent) out = "(" + out + ")";
    return out;
}

} // namespace

std::string to_string(const ExprPtr& expr, const std::vector<std::string>& names) {
    return render(expr, names, 1);
}

std::string to_string(const MapExpr& map, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < map.components().size(); ++i) {
        if (i > 0) out += "; ";
        out += to_string(map.components()[i], names);
    }
    return out;
}

} // namespace singulab
