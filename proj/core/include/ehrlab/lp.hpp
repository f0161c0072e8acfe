#pragma once

#include <span>
#include <vector>

#include "ehrlab/linalg.hpp"
#include "ehrlab/rational.hpp"

namespace ehrlab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  Vec x;
};

enum class Rel { Le, Eq };

/// Exact two-phase simplex with Bland's rule:
///   maximize c.x  subject to  A x (<= / ==) b,  x >= 0.
/// All arithmetic is rational, so the result is exact and termination is
/// guaranteed.  Intended for the small dense systems this library meets.
LpResult solve_lp(Mat a, Vec b, std::vector<Rel> rel, Vec c);

/// x in conv(points)?  Decided by phase-1 feasibility of the convex
/// combination system; works in any dimension (no full-dimensionality
/// assumption).
bool in_convex_hull(std::span<const Point> points, const Point& x);

}  // namespace ehrlab
