#include "ehrlab/quasipoly.hpp"

#include <map>
#include <stdexcept>

#include "ehrlab/errors.hpp"
#include "ehrlab/linalg.hpp"

namespace ehrlab {

std::string PeriodSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

QuasiPolynomial::QuasiPolynomial(std::vector<PeriodicFunction> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.push_back(PeriodicFunction::zero());
  for (auto& c : coefficients_) c = c.reduced();
  while (coefficients_.size() > 1 && coefficients_.back().is_zero()) coefficients_.pop_back();
}

QuasiPolynomial QuasiPolynomial::constant(Rational c) {
  return QuasiPolynomial({PeriodicFunction::constant(std::move(c))});
}

QuasiPolynomial QuasiPolynomial::monomial(Rational c, int degree) {
  std::vector<PeriodicFunction> coeffs(static_cast<std::size_t>(degree) + 1,
                                       PeriodicFunction::zero());
  coeffs.back() = PeriodicFunction::constant(std::move(c));
  return QuasiPolynomial(std::move(coeffs));
}

Rational QuasiPolynomial::operator()(const Int& k) const {
  Rational acc = 0;
  Int kp = 1;
  for (const auto& c : coefficients_) {
    acc += c(k) * Rational(kp);
    kp *= k;
  }
  return acc;
}

PeriodSequence QuasiPolynomial::period_sequence() const {
  PeriodSequence ps;
  ps.entries.reserve(coefficients_.size());
  for (const auto& c : coefficients_) ps.entries.push_back(c.period());  // already minimal
  return ps;
}

QuasiPolynomial QuasiPolynomial::operator-() const {
  std::vector<PeriodicFunction> coeffs;
  coeffs.reserve(coefficients_.size());
  for (const auto& c : coefficients_) coeffs.push_back(-c);
  return QuasiPolynomial(std::move(coeffs));
}

QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  std::vector<PeriodicFunction> coeffs;
  const std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.coefficients_.size()) {
      coeffs.push_back(b.coefficients_[i]);
    } else if (i >= b.coefficients_.size()) {
      coeffs.push_back(a.coefficients_[i]);
    } else {
      coeffs.push_back(a.coefficients_[i] + b.coefficients_[i]);
    }
  }
  return QuasiPolynomial(std::move(coeffs));
}

QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b) { return a + (-b); }

QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  std::vector<PeriodicFunction> coeffs(a.coefficients_.size() + b.coefficients_.size() - 1,
                                       PeriodicFunction::zero());
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      coeffs[i + j] = coeffs[i + j] + a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return QuasiPolynomial(std::move(coeffs));
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  // Canonical forms: direct comparison decides functional equality.
  if (a.coefficients_.size() != b.coefficients_.size()) return false;
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (!(a.coefficients_[i].values() == b.coefficients_[i].values())) return false;
  }
  return true;
}

bool equivalent(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const QuasiPolynomial d = a - b;
  for (const auto& c : d.coefficients()) {
    if (c.period() != 1) return false;
  }
  return true;
}

QuasiPolynomial interpolate(const std::vector<std::pair<Int, Rational>>& samples,
                            int degree, std::int64_t period) {
  if (degree < 0) throw std::invalid_argument("interpolate: degree must be nonnegative");
  if (period < 1) throw std::invalid_argument("interpolate: period must be positive");

  std::map<std::int64_t, std::map<Int, Rational>> by_residue;
  for (const auto& [k, v] : samples) {
    if (k < 1) throw std::invalid_argument("interpolate: sample abscissas must be positive");
    auto& cls = by_residue[mod_nonneg(k, period)];
    auto [it, inserted] = cls.emplace(k, v);
    if (!inserted && it->second != v) {
      throw Error("interpolate: conflicting values for k = " + it->first.str());
    }
  }

  const std::size_t need = static_cast<std::size_t>(degree) + 1;
  for (std::int64_t r = 0; r < period; ++r) {
    const auto it = by_residue.find(r);
    const std::size_t have = it == by_residue.end() ? 0 : it->second.size();
    if (have < need) throw InsufficientSamplesError(r, have, need);
  }

  // values[i][r] = c_i(r); each residue class yields one Vandermonde system.
  std::vector<std::vector<Rational>> values(need,
                                            std::vector<Rational>(static_cast<std::size_t>(period)));
  for (std::int64_t r = 0; r < period; ++r) {
    const auto& cls = by_residue[r];
    Mat a;
    Vec b;
    auto it = cls.begin();
    for (std::size_t row = 0; row < need; ++row, ++it) {
      Vec va(need);
      Int kp = 1;
      for (std::size_t i = 0; i < need; ++i) {
        va[i] = Rational(kp);
        kp *= it->first;
      }
      a.push_back(std::move(va));
      b.push_back(it->second);
    }
    auto sol = solve_square(std::move(a), std::move(b));
    if (!sol) throw Error("interpolate: singular system (duplicate abscissas?)");
    for (std::size_t i = 0; i < need; ++i) values[i][static_cast<std::size_t>(r)] = (*sol)[i];
    // Surplus samples in this class must agree with the solved polynomial.
    for (; it != cls.end(); ++it) {
      Rational acc = 0;
      Int kp = 1;
      for (std::size_t i = 0; i < need; ++i) {
        acc += (*sol)[i] * Rational(kp);
        kp *= it->first;
      }
      if (acc != it->second) {
        throw Error("interpolate: samples are inconsistent with the requested degree/period at k = " +
                    it->first.str());
      }
    }
  }

  std::vector<PeriodicFunction> coeffs;
  coeffs.reserve(need);
  for (auto& table : values) coeffs.emplace_back(std::move(table));
  return QuasiPolynomial(std::move(coeffs));
}

}  // namespace ehrlab
