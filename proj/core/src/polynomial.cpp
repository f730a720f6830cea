#include "singulab/polynomial.hpp"

#include "singulab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace singulab {

namespace {

// storage order: anti-graded lex, identity permutation, greatest first
bool term_precedes(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

Polynomial::Polynomial(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 1)
        throw DomainMismatchError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int variable_count, const Rational& value) {
    Polynomial p(variable_count);
    if (value != 0) p.terms_.push_back({value, Monomial::one(variable_count)});
    return p;
}

Polynomial Polynomial::variable(int variable_count, int index) {
    Polynomial p(variable_count);
    p.terms_.push_back({Rational(1), Monomial::variable(variable_count, index)});
    return p;
}

Polynomial Polynomial::single_term(const Rational& coeff, Monomial mono) {
    Polynomial p(mono.variable_count());
    if (coeff != 0) p.terms_.push_back({coeff, std::move(mono)});
    return p;
}

Polynomial Polynomial::from_terms(int variable_count, const std::vector<Term>& terms) {
    ExpMap map;
    for (const Term& t : terms) {
        if (t.mono.variable_count() != variable_count)
            throw DomainMismatchError("term variable-count mismatch");
        map[t.mono.exponents()] += t.coeff;
    }
    return from_map(variable_count, map);
}

Polynomial Polynomial::from_map(int variable_count, const ExpMap& map) {
    Polynomial p(variable_count);
    for (const auto& [exps, coeff] : map)
        if (coeff != 0) p.terms_.push_back({coeff, Monomial(exps)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return term_precedes(a.mono, b.mono); });
    return p;
}

void Polynomial::check_same_vars(const Polynomial& other) const {
    if (variable_count_ != other.variable_count_)
        throw DomainMismatchError("polynomial variable-count mismatch");
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainMismatchError("zero polynomial has no leading term");
    return terms_.front();
}

const Term& Polynomial::leading_term(const LocalOrder& order) const {
    if (terms_.empty()) throw DomainMismatchError("zero polynomial has no leading term");
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

int Polynomial::order() const {
    if (terms_.empty()) throw DomainMismatchError("zero polynomial has no order");
    return terms_.front().mono.total_degree();
}

int Polynomial::degree() const {
    if (terms_.empty()) throw DomainMismatchError("zero polynomial has no degree");
    return terms_.back().mono.total_degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial p(variable_count_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({-t.coeff, t.mono});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_vars(other);
    // merge two sorted term lists
    Polynomial p(variable_count_);
    p.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = other.terms_[j];
        if (a.mono == b.mono) {
            Rational c = a.coeff + b.coeff;
            if (c != 0) p.terms_.push_back({std::move(c), a.mono});
            ++i, ++j;
        } else if (term_precedes(a.mono, b.mono)) {
            p.terms_.push_back(a);
            ++i;
        } else {
            p.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) p.terms_.push_back(other.terms_[j]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = *this + other; }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = *this - other; }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_vars(other);
    ExpMap map;
    for (const Term& a : terms_)
        for (const Term& b : other.terms_)
            map[(a.mono * b.mono).exponents()] += a.coeff * b.coeff;
    return from_map(variable_count_, map);
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor == 0) return Polynomial(variable_count_);
    Polynomial p(variable_count_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.coeff * factor, t.mono});
    return p;
}

Polynomial Polynomial::times_term(const Rational& coeff, const Monomial& mono) const {
    if (coeff == 0) return Polynomial(variable_count_);
    Polynomial p(variable_count_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.coeff * coeff, t.mono * mono});
    // multiplying by a fixed monomial preserves the relative order of terms
    return p;
}

Polynomial Polynomial::derivative(int index) const {
    if (index < 0 || index >= variable_count_)
        throw DomainMismatchError("derivative index out of range");
    ExpMap map;
    for (const Term& t : terms_) {
        int e = t.mono.exponent(index);
        if (e == 0) continue;
        std::vector<int> exps = t.mono.exponents();
        exps[static_cast<std::size_t>(index)] = e - 1;
        map[exps] += t.coeff * e;
    }
    return from_map(variable_count_, map);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != variable_count_)
        throw DomainMismatchError("evaluation point dimension mismatch");
    Rational acc(0);
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < variable_count_; ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) v *= pow(point[static_cast<std::size_t>(i)], static_cast<unsigned long>(e));
        }
        acc += v;
    }
    return acc;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != variable_count_)
        throw DomainMismatchError("evaluation point dimension mismatch");
    double acc = 0.0;
    for (const Term& t : terms_) {
        double v = to_double(t.coeff);
        for (int i = 0; i < variable_count_; ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) v *= std::pow(point[static_cast<std::size_t>(i)], e);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::shifted(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != variable_count_)
        throw DomainMismatchError("shift point dimension mismatch");
    Polynomial result = *this;
    for (int v = 0; v < variable_count_; ++v) {
        const Rational& a = point[static_cast<std::size_t>(v)];
        if (a == 0) continue;
        // substitute x_v -> x_v + a via binomial expansion
        ExpMap map;
        for (const Term& t : result.terms_) {
            int k = t.mono.exponent(v);
            std::vector<int> exps = t.mono.exponents();
            Rational apow(1);
            for (int j = k; j >= 0; --j) {
                exps[static_cast<std::size_t>(v)] = j;
                map[exps] += t.coeff * binomial(k, j) * apow;
                apow *= a;
            }
        }
        result = from_map(variable_count_, map);
    }
    return result;
}

Polynomial Polynomial::composed_linear(const std::vector<std::vector<Rational>>& matrix) const {
    if (static_cast<int>(matrix.size()) != variable_count_)
        throw DomainMismatchError("matrix row count mismatch");
    std::vector<Polynomial> forms;
    forms.reserve(matrix.size());
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != variable_count_)
            throw DomainMismatchError("matrix column count mismatch");
        Polynomial form(variable_count_);
        for (int j = 0; j < variable_count_; ++j)
            form += single_term(row[static_cast<std::size_t>(j)], Monomial::variable(variable_count_, j));
        forms.push_back(std::move(form));
    }
    // cache powers of each linear form up to the largest exponent used
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(variable_count_));
    for (int i = 0; i < variable_count_; ++i) {
        int max_e = 0;
        for (const Term& t : terms_) max_e = std::max(max_e, t.mono.exponent(i));
        auto& list = powers[static_cast<std::size_t>(i)];
        list.push_back(constant(variable_count_, Rational(1)));
        for (int e = 1; e <= max_e; ++e) list.push_back(list.back() * forms[static_cast<std::size_t>(i)]);
    }
    Polynomial result(variable_count_);
    for (const Term& t : terms_) {
        Polynomial prod = constant(variable_count_, t.coeff);
        for (int i = 0; i < variable_count_; ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) prod = prod * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
        }
        result += prod;
    }
    return result;
}

std::vector<Rational> Polynomial::restricted_to_line(const std::vector<Rational>& base,
                                                     const std::vector<Rational>& direction) const {
    if (static_cast<int>(base.size()) != variable_count_ ||
        static_cast<int>(direction.size()) != variable_count_)
        throw DomainMismatchError("line dimension mismatch");
    std::vector<Rational> out;
    if (terms_.empty()) return out;
    out.assign(static_cast<std::size_t>(degree()) + 1, Rational(0));
    std::vector<Rational> factor, next;
    for (const Term& t : terms_) {
        // expand prod_i (base_i + t * direction_i)^{e_i} as a univariate in t
        factor.assign(1, t.coeff);
        for (int i = 0; i < variable_count_; ++i) {
            const Rational& b = base[static_cast<std::size_t>(i)];
            const Rational& d = direction[static_cast<std::size_t>(i)];
            for (int rep = 0; rep < t.mono.exponent(i); ++rep) {
                next.assign(factor.size() + 1, Rational(0));
                for (std::size_t k = 0; k < factor.size(); ++k) {
                    if (b != 0) next[k] += factor[k] * b;
                    if (d != 0) next[k + 1] += factor[k] * d;
                }
                factor.swap(next);
            }
        }
        for (std::size_t k = 0; k < factor.size(); ++k) out[k] += factor[k];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    Polynomial p(variable_count_);
    for (const Term& t : terms_)
        if (t.mono.total_degree() == degree) p.terms_.push_back(t);
    return p;
}

Polynomial Polynomial::lowest_component() const {
    return homogeneous_component(order());
}

Polynomial Polynomial::jet(int k) const {
    Polynomial p(variable_count_);
    for (const Term& t : terms_) {
        if (t.mono.total_degree() > k) break; // terms are sorted by ascending degree
        p.terms_.push_back(t);
    }
    return p;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer den(1);
    for (const Term& t : terms_) {
        Integer d = t.coeff.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Integer num(0);
    for (const Term& t : terms_) {
        Integer scaled_num = t.coeff.get_num() * (den / t.coeff.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational factor(den, num);
    factor.canonicalize();
    if (terms_.front().coeff * factor < 0) factor = -factor;
    return scaled(factor);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != variable_count_)
        throw DomainMismatchError("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out << '-';
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.mono.is_constant()) {
            out << singulab::to_string(c);
            printed = true;
        }
        for (int i = 0; i < variable_count_; ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (printed) out << '*';
            out << names[static_cast<std::size_t>(i)];
            if (e > 1) out << '^' << e;
            printed = true;
        }
    }
    return out.str();
}

} // namespace singulab
