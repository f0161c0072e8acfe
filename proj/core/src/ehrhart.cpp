#include "ehrlab/ehrhart.hpp"

#include "ehrlab/errors.hpp"

namespace ehrlab {

namespace {

template <typename Target>
EhrhartResult ehrhart_impl(const Target& target, int dim, int jobs) {
  const Int denominator = target.denominator();
  if (denominator > (Int(1) << 31)) {
    throw Error("denominator too large for sampling: " + denominator.str());
  }
  const std::int64_t s = static_cast<std::int64_t>(denominator);
  const std::int64_t n = dim;

  EhrhartResult res;
  res.period_used = s;

  std::vector<std::pair<Int, Rational>> samples;
  samples.reserve(static_cast<std::size_t>(s * (n + 1)));
  for (std::int64_t k = 1; k <= s * (n + 1); ++k) {
    const Int c = count_lattice_points(target, Int(k), jobs);
    res.samples_used.emplace_back(Int(k), c);
    samples.emplace_back(Int(k), Rational(c));
  }
  res.qp = interpolate(samples, static_cast<int>(n), s);

  for (std::int64_t k = s * (n + 1) + 1; k <= s * (n + 2); ++k) {
    const Int c = count_lattice_points(target, Int(k), jobs);
    res.validation_points.emplace_back(Int(k), c);
    const Rational predicted = res.qp(Int(k));
    if (predicted != Rational(c)) {
      throw ValidationMismatchError("interpolated quasi-polynomial predicts " +
                                    rational_to_string(predicted) + " at k = " +
                                    std::to_string(k) + " but the exact count is " + c.str());
    }
  }
  return res;
}

template <typename Target>
Rational leading_volume_impl(const Target& target, int dim, int jobs) {
  const EhrhartResult res = ehrhart_impl(target, dim, jobs);
  if (res.qp.degree() != dim) {
    throw PeriodViolationError("Ehrhart quasi-polynomial has degree " +
                               std::to_string(res.qp.degree()) + ", expected " +
                               std::to_string(dim));
  }
  const PeriodicFunction& lead = res.qp.coefficient(dim);
  if (lead.period() != 1) {
    throw PeriodViolationError("leading Ehrhart coefficient is non-constant (period " +
                               std::to_string(lead.period()) + ")");
  }
  return lead.values()[0];
}

}  // namespace

EhrhartResult ehrhart(const VPolytope& target, int jobs) {
  if (target.ambient_dim() > 0 && !target.full_dimensional()) {
    throw NotFullDimensionalError(
        "ehrhart requires a full-dimensional target; work in the affine hull instead");
  }
  return ehrhart_impl(target, target.ambient_dim(), jobs);
}

EhrhartResult ehrhart(const PolytopalBall& target, int jobs) {
  return ehrhart_impl(target, target.ambient_dim(), jobs);
}

Rational leading_volume(const VPolytope& target, int jobs) {
  if (target.ambient_dim() > 0 && !target.full_dimensional()) {
    throw NotFullDimensionalError("leading_volume requires a full-dimensional target");
  }
  return leading_volume_impl(target, target.ambient_dim(), jobs);
}

Rational leading_volume(const PolytopalBall& target, int jobs) {
  return leading_volume_impl(target, target.ambient_dim(), jobs);
}

}  // namespace ehrlab
