#ifndef F4PROLONG_EXACTALG_RATIONAL_HPP
#define F4PROLONG_EXACTALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace f4prolong {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

}  // namespace f4prolong

#endif  // F4PROLONG_EXACTALG_RATIONAL_HPP
