#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ehrlab/count.hpp"
#include "ehrlab/quasipoly.hpp"

namespace ehrlab {

struct EhrhartResult {
  QuasiPolynomial qp;
  std::int64_t period_used = 1;
  std::vector<std::pair<Int, Int>> samples_used;
  std::vector<std::pair<Int, Int>> validation_points;
};

/// Recovers the Ehrhart quasi-polynomial of a full-dimensional target of
/// dimension n by counting the dilates k = 1 .. s(n+1), where s is the
/// target's denominator (the period of every coefficient divides s), and
/// interpolating per residue class.  A full extra residue round
/// k = s(n+1)+1 .. s(n+2) is then counted and checked against the
/// interpolant; any mismatch throws ValidationMismatchError, since it can
/// only mean a defect, never legitimate input.
EhrhartResult ehrhart(const VPolytope& target, int jobs = 1);
EhrhartResult ehrhart(const PolytopalBall& target, int jobs = 1);

/// The leading coefficient c_n, which must be constant; returned as the
/// single rational it is (the volume of the target).
Rational leading_volume(const VPolytope& target, int jobs = 1);
Rational leading_volume(const PolytopalBall& target, int jobs = 1);

}  // namespace ehrlab
