#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ehrlab {

// Exact scalars. Every quantity in the library is an arbitrary-precision
// integer or rational; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Point = std::vector<Rational>;

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor division a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

/// Ceiling division a/b for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Int floor_rat(const Rational& q) { return floor_div(numer(q), denom(q)); }
inline Int ceil_rat(const Rational& q) { return ceil_div(numer(q), denom(q)); }

/// Nonnegative representative of k mod s (s >= 1), defined for all integers k.
inline std::int64_t mod_nonneg(const Int& k, std::int64_t s) {
  Int r = k % s;
  if (r < 0) r += s;
  return static_cast<std::int64_t>(r);
}

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

/// Emits "a/b" with the denominator always present ("5" -> "5/1").
std::string rational_to_string(const Rational& q);

/// Parses "a" or "a/b" (b > 0); throws ParseError on anything else.
Rational rational_from_string(std::string_view s);

}  // namespace ehrlab
