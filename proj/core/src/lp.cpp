#include "ehrlab/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace ehrlab {

namespace {

// Dense tableau over the columns [structural | slack | artificial | rhs].
// basis[i] is the variable owning row i.
struct Tableau {
  Mat rows;                  // m x (total + 1)
  std::vector<std::size_t> basis;
  std::size_t total = 0;

  Rational& rhs(std::size_t i) { return rows[i][total]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= total; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

// Maximizes obj over the tableau's feasible region.  `allowed(c)` masks the
// columns eligible to enter.  Bland's rule: smallest eligible column enters,
// ties in the ratio test break toward the smallest basis variable.
template <typename Allowed>
LpStatus run_simplex(Tableau& t, Vec& obj, Rational& value, Allowed allowed) {
  for (;;) {
    std::size_t enter = t.total;
    for (std::size_t c = 0; c < t.total; ++c) {
      if (obj[c] > 0 && allowed(c)) {
        enter = c;
        break;
      }
    }
    if (enter == t.total) return LpStatus::Optimal;

    std::size_t leave = t.rows.size();
    Rational best;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][enter] <= 0) continue;
      const Rational ratio = t.rhs(i) / t.rows[i][enter];
      if (leave == t.rows.size() || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.rows.size()) return LpStatus::Unbounded;

    t.pivot(leave, enter);
    // Keep the objective row reduced w.r.t. the basis.
    const Rational f = obj[enter];
    if (f != 0) {
      for (std::size_t j = 0; j < t.total; ++j) obj[j] -= f * t.rows[leave][j];
      value += f * t.rhs(leave);
    }
  }
}

}  // namespace

LpResult solve_lp(Mat a, Vec b, std::vector<Rel> rel, Vec c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  assert(b.size() == m && rel.size() == m);

  std::size_t slacks = 0;
  for (const auto r : rel) {
    if (r == Rel::Le) ++slacks;
  }

  Tableau t;
  t.total = n + slacks + m;  // one artificial per row keeps phase 1 uniform
  t.rows.assign(m, Vec(t.total + 1, Rational(0)));
  t.basis.assign(m, 0);

  std::size_t slack_at = n;
  for (std::size_t i = 0; i < m; ++i) {
    const bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = neg ? -a[i][j] : a[i][j];
    t.rows[i][t.total] = neg ? -b[i] : b[i];
    if (rel[i] == Rel::Le) {
      t.rows[i][slack_at] = neg ? Rational(-1) : Rational(1);
      ++slack_at;
    }
    t.rows[i][n + slacks + i] = 1;
    t.basis[i] = n + slacks + i;
  }

  // Phase 1: maximize -sum(artificials).
  Vec obj1(t.total, Rational(0));
  Rational val1 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    // Reduce the artificial objective against the initial (artificial) basis.
    for (std::size_t j = 0; j < n + slacks; ++j) obj1[j] += t.rows[i][j];
    val1 -= t.rhs(i);  // artificial value = rhs
  }
  // obj1 currently holds sum of rows over non-artificial columns; maximizing
  // -sum(artificials) is maximizing these reduced costs.
  run_simplex(t, obj1, val1, [](std::size_t) { return true; });
  if (val1 != 0) return {LpStatus::Infeasible, Rational(0), {}};

  // Drive any artificial still basic at zero level out of the basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n + slacks) continue;
    std::size_t c = t.total;
    for (std::size_t j = 0; j < n + slacks; ++j) {
      if (t.rows[i][j] != 0) {
        c = j;
        break;
      }
    }
    if (c != t.total) t.pivot(i, c);
    // else: the row is a redundant constraint; it stays inert.
  }

  // Phase 2 over the original objective, artificials barred.
  Vec obj2(t.total, Rational(0));
  Rational val2 = 0;
  for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n + slacks) continue;  // redundant row with artificial basis
    const Rational f = obj2[t.basis[i]];
    if (f != 0) {
      for (std::size_t j = 0; j < t.total; ++j) obj2[j] -= f * t.rows[i][j];
      val2 += f * t.rhs(i);
    }
  }
  const std::size_t structural_end = n + slacks;
  const LpStatus st =
      run_simplex(t, obj2, val2, [&](std::size_t col) { return col < structural_end; });
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rational(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.objective = val2;
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs(i);
  }
  return res;
}

bool in_convex_hull(std::span<const Point> points, const Point& x) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  const std::size_t m = points.size();
  Mat a(d + 1, Vec(m, Rational(0)));
  Vec b(d + 1);
  for (std::size_t c = 0; c < d; ++c) {
    if (points[0].size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    for (std::size_t j = 0; j < m; ++j) a[c][j] = points[j][c];
    b[c] = x[c];
  }
  for (std::size_t j = 0; j < m; ++j) a[d][j] = 1;
  b[d] = 1;
  const auto res =
      solve_lp(std::move(a), std::move(b), std::vector<Rel>(d + 1, Rel::Eq), Vec(m, Rational(0)));
  return res.status == LpStatus::Optimal;
}

}  // namespace ehrlab
