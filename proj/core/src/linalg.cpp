#include "ehrlab/linalg.hpp"

#include <cassert>

namespace ehrlab {

namespace {

// Row echelon form in place; returns the pivot column of each pivot row.
// Pivoting picks the first nonzero entry, which is exact for rationals.
std::vector<std::size_t> echelon(Mat& a, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pr = row;
    while (pr < a.size() && a[pr][col] == 0) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[row], a[pr]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < a[row].size(); ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(Mat a) {
  if (a.empty()) return 0;
  return static_cast<int>(echelon(a, a[0].size()).size());
}

Rational determinant(Mat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && a[pr][col] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != col) {
      std::swap(a[col], a[pr]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<Vec> solve_square(Mat a, Vec b) {
  const std::size_t n = a.size();
  assert(b.size() == n);
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == n);
    a[i].push_back(b[i]);
  }
  const auto pivots = echelon(a, n);
  if (pivots.size() != n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::optional<Vec> solve_consistent(Mat a, Vec b) {
  const std::size_t m = a.size();
  assert(b.size() == m);
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  const auto pivots = echelon(a, n);
  // Inconsistent iff some row reduces to (0 ... 0 | nonzero).
  for (std::size_t i = pivots.size(); i < m; ++i) {
    if (a[i][n] != 0) return std::nullopt;
  }
  Vec x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<Vec> nullspace(Mat a, std::size_t cols) {
  const auto pivots = echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -a[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ehrlab
