#pragma once

#include <cstdint>
#include <vector>

#include "ehrlab/rational.hpp"

namespace ehrlab {

/// A periodic function Z -> Q given by one period of values: f(k) is
/// values()[k mod period()], with the nonnegative modulus, so the function
/// is total on Z.  The stored period need not be minimal.
class PeriodicFunction {
 public:
  /// One full period of values; the period is values.size() (>= 1).
  explicit PeriodicFunction(std::vector<Rational> values);

  static PeriodicFunction constant(Rational c);
  static PeriodicFunction zero() { return constant(0); }

  std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& operator()(const Int& k) const {
    return values_[static_cast<std::size_t>(mod_nonneg(k, period()))];
  }

  /// Least divisor d of period() with values[j] == values[(j+d) mod period()] for all j.
  std::int64_t minimal_period() const;

  PeriodicFunction reduced() const;
  /// Re-expresses the function with a period that is a multiple of the current one.
  PeriodicFunction with_period(std::int64_t s) const;

  bool is_zero() const;
  bool is_constant() const { return minimal_period() == 1; }

  PeriodicFunction operator-() const;
  friend PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b);
  friend PeriodicFunction operator*(const PeriodicFunction& a, const PeriodicFunction& b);

  /// Equality as functions on Z (insensitive to non-minimal representations).
  friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b);

 private:
  std::vector<Rational> values_;
};

}  // namespace ehrlab
