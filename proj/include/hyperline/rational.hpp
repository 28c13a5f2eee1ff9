#ifndef HYPERLINE_RATIONAL_HPP
#define HYPERLINE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hyperline {

// Exact arbitrary-precision scalars. GMP keeps rationals in canonical
// reduced form (positive denominator, gcd 1) as long as every entry point
// canonicalizes, so all construction goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);
Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p", "p/q" with arbitrary-precision parts. Throws
// SyntaxError for malformed text, DivisionByZero for a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" form.
std::string format_rational(const Rational& value);
std::string format_integer(const Integer& value);

// b^e for rational b != 0 and any machine-sized integer exponent.
Rational rational_pow(const Rational& base, long long exponent);

Integer floor_rational(const Rational& value);
bool is_integer(const Rational& value);

int sign_of(const Rational& value);

// Fixed-point decimal rendering with round-half-up, used by the SVG and
// ASCII renderers where output must be byte-deterministic.
std::string format_decimal_fixed(const Rational& value, int decimals);

}  // namespace hyperline

#endif
