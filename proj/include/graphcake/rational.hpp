#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace graphcake {

/// Exact rational number. Every position, value and threshold in the library is one of these.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed). Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q >= 1 in lowest terms, e.g. "0/1", "1/3", "-2/1".
std::string format_rational(const Rational& value);

/// Decimal approximation for human-readable output only.
std::string approximate(const Rational& value, int digits = 6);

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace graphcake
