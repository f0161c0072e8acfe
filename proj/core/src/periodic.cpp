#include "ehrlab/periodic.hpp"

#include <numeric>
#include <stdexcept>

namespace ehrlab {

PeriodicFunction::PeriodicFunction(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("periodic function needs at least one value");
}

PeriodicFunction PeriodicFunction::constant(Rational c) {
  return PeriodicFunction(std::vector<Rational>{std::move(c)});
}

std::int64_t PeriodicFunction::minimal_period() const {
  const std::int64_t s = period();
  for (std::int64_t d = 1; d <= s; ++d) {
    if (s % d != 0) continue;
    bool ok = true;
    for (std::int64_t j = 0; j + d < s && ok; ++j) {
      if (values_[static_cast<std::size_t>(j)] != values_[static_cast<std::size_t>(j + d)]) ok = false;
    }
    if (ok) return d;
  }
  return s;
}

PeriodicFunction PeriodicFunction::reduced() const {
  const std::int64_t d = minimal_period();
  if (d == period()) return *this;
  return PeriodicFunction(
      std::vector<Rational>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(d)));
}

PeriodicFunction PeriodicFunction::with_period(std::int64_t s) const {
  if (s % period() != 0) throw std::invalid_argument("new period must be a multiple of the old");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(s));
  for (std::int64_t j = 0; j < s; ++j) {
    out.push_back(values_[static_cast<std::size_t>(j % period())]);
  }
  return PeriodicFunction(std::move(out));
}

bool PeriodicFunction::is_zero() const {
  for (const auto& v : values_) {
    if (v != 0) return false;
  }
  return true;
}

PeriodicFunction PeriodicFunction::operator-() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(-v);
  return PeriodicFunction(std::move(out));
}

namespace {

template <typename Op>
PeriodicFunction pointwise(const PeriodicFunction& a, const PeriodicFunction& b, Op op) {
  const std::int64_t s = std::lcm(a.period(), b.period());
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(s));
  for (std::int64_t j = 0; j < s; ++j) {
    out.push_back(op(a.values()[static_cast<std::size_t>(j % a.period())],
                     b.values()[static_cast<std::size_t>(j % b.period())]));
  }
  return PeriodicFunction(std::move(out));
}

}  // namespace

PeriodicFunction operator+(const PeriodicFunction& a, const PeriodicFunction& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

PeriodicFunction operator-(const PeriodicFunction& a, const PeriodicFunction& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

PeriodicFunction operator*(const PeriodicFunction& a, const PeriodicFunction& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
  const PeriodicFunction ra = a.reduced();
  const PeriodicFunction rb = b.reduced();
  return ra.values() == rb.values();
}

}  // namespace ehrlab
