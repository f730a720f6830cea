#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace singulab {

/// Exact coefficient scalar: arbitrary-precision rational, always kept in
/// lowest terms with a positive denominator (zero is 0/1). Backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Rational from a numerator/denominator pair, canonicalized.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on junk or q = 0.
Rational rational_from_string(const std::string& text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& value);

/// value^exponent for a non-negative integer exponent.
Rational pow(const Rational& value, unsigned long exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Floor of a rational, as an Integer.
Integer floor(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

} // namespace singulab
