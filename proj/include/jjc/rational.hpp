#ifndef JJC_RATIONAL_HPP
#define JJC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jjc {

/// Exact scalar field. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

/// p/q in lowest terms. Throws std::domain_error when q == 0.
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q == 1; sign carried by the numerator.
std::string to_string(const Rational& r);

/// Accepts [+-]digits or [+-]digits/digits. Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace jjc

#endif
