#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ehrlab/periodic.hpp"

namespace ehrlab {

/// Minimal periods of the coefficient functions, lowest degree first.
struct PeriodSequence {
  std::vector<std::int64_t> entries;

  friend bool operator==(const PeriodSequence&, const PeriodSequence&) = default;
  std::string str() const;  // "2,3,1"
};

/// An element of the ring of quasi-polynomials: sum_i c_i(k) k^i with
/// periodic coefficient functions c_i.  Instances are kept canonical:
/// every coefficient at its minimal period and identically-zero leading
/// coefficients trimmed (the zero quasi-polynomial has degree 0 and the
/// single coefficient 0).  Two instances are equal as functions on Z iff
/// their canonical forms compare equal.
class QuasiPolynomial {
 public:
  QuasiPolynomial() : QuasiPolynomial(std::vector<PeriodicFunction>{PeriodicFunction::zero()}) {}
  /// Coefficients c_0..c_n, lowest degree first; canonicalizes.
  explicit QuasiPolynomial(std::vector<PeriodicFunction> coefficients);

  static QuasiPolynomial constant(Rational c);
  /// c * t^degree
  static QuasiPolynomial monomial(Rational c, int degree);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<PeriodicFunction>& coefficients() const { return coefficients_; }
  const PeriodicFunction& coefficient(int i) const { return coefficients_[static_cast<std::size_t>(i)]; }

  Rational operator()(const Int& k) const;

  bool is_zero() const { return degree() == 0 && coefficients_[0].is_zero(); }

  PeriodSequence period_sequence() const;

  QuasiPolynomial operator-() const;
  friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b);
  friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b);
  friend QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b);
  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

 private:
  std::vector<PeriodicFunction> coefficients_;
};

/// True iff a - b is an honest polynomial, i.e. every coefficient of the
/// difference is a constant function.
bool equivalent(const QuasiPolynomial& a, const QuasiPolynomial& b);

/// Recovers the unique quasi-polynomial of degree <= degree whose
/// coefficients have period dividing period from exact samples (k, value).
/// Each residue class mod period must contribute at least degree+1 distinct
/// abscissas; throws InsufficientSamplesError naming the deficient class.
/// Surplus samples are checked against the solution.
QuasiPolynomial interpolate(const std::vector<std::pair<Int, Rational>>& samples,
                            int degree, std::int64_t period);

}  // namespace ehrlab
