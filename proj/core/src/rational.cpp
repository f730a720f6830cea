#include "singulab/rational.hpp"

#include <stdexcept>

namespace singulab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational pow(const Rational& value, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), exponent);
    return make_rational(num, den);
}

Integer floor(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

} // namespace singulab
