#include "ehrlab/count.hpp"

#include <algorithm>
#include <future>
#include <span>
#include <stdexcept>
#include <vector>

namespace ehrlab {

namespace {

// One convex piece, cleared to integer inequalities A.x <= k*r (the offset
// denominator is folded into the row), plus rational vertex extrema for the
// dilation boxes.
struct CompiledPiece {
  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  std::vector<Rational> min_coord, max_coord;
};

CompiledPiece compile_piece(const VPolytope& p) {
  CompiledPiece cp;
  for (const auto& ineq : p.hrep().inequalities) {
    const Int d = denom(ineq.offset);
    std::vector<Int> row;
    row.reserve(ineq.normal.size());
    for (const auto& a : ineq.normal) row.push_back(a * d);
    cp.rows.push_back(std::move(row));
    cp.rhs.push_back(numer(ineq.offset));
  }
  const std::size_t n = static_cast<std::size_t>(p.ambient_dim());
  cp.min_coord.resize(n);
  cp.max_coord.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational mn = p.vertices()[0][c], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    cp.min_coord[c] = mn;
    cp.max_coord[c] = mx;
  }
  return cp;
}

// Integer box of the k-th dilate of one piece; empty() possible for thin
// pieces whose coordinate range misses every integer.
std::pair<std::vector<Int>, std::vector<Int>> dilate_box(const CompiledPiece& cp, const Int& k) {
  const std::size_t n = cp.min_coord.size();
  std::vector<Int> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = ceil_rat(Rational(k) * cp.min_coord[c]);
    hi[c] = floor_rat(Rational(k) * cp.max_coord[c]);
  }
  return {std::move(lo), std::move(hi)};
}

inline long long wfloor_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}
inline long long wceil_div(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}
inline Int wfloor_div(const Int& a, const Int& b) { return floor_div(a, b); }
inline Int wceil_div(const Int& a, const Int& b) { return ceil_div(a, b); }

// Piece data specialized to one dilation and one working integer type.
template <typename W>
struct ScanPiece {
  std::vector<std::vector<W>> rows;
  std::vector<W> rhs_k;   // k * rhs
  std::vector<W> lo, hi;  // integer box of the dilate
  bool empty = false;
};

template <typename W>
struct Interval {
  W lo, hi;
};

// Counts lattice points with leading coordinate in [x0_lo, x0_hi].  Prefix
// coordinates are enumerated; the feasible range of the final coordinate is
// solved from the inequalities in one pass per piece, and the per-piece
// ranges are merged so points shared between pieces count once.
template <typename W>
Int scan_chunk(std::span<const ScanPiece<W>> pieces, std::span<const W> lo,
               std::span<const W> hi, const W& x0_lo, const W& x0_hi) {
  const std::size_t n = lo.size();
  const std::size_t last = n - 1;
  Int total = 0;

  std::vector<W> x(last);  // prefix coordinates
  if (last > 0) {
    if (x0_lo > x0_hi) return 0;
    x[0] = x0_lo;
    for (std::size_t c = 1; c < last; ++c) x[c] = lo[c];
  }

  std::vector<Interval<W>> intervals;
  intervals.reserve(pieces.size());

  for (;;) {
    intervals.clear();
    for (const auto& piece : pieces) {
      if (piece.empty) continue;
      bool reject = false;
      for (std::size_t c = 0; c < last; ++c) {
        if (x[c] < piece.lo[c] || x[c] > piece.hi[c]) {
          reject = true;
          break;
        }
      }
      if (reject) continue;

      W zlo = piece.lo[last];
      W zhi = piece.hi[last];
      bool feasible = true;
      for (std::size_t r = 0; r < piece.rows.size() && feasible; ++r) {
        const auto& row = piece.rows[r];
        W s = piece.rhs_k[r];
        for (std::size_t c = 0; c < last; ++c) s -= row[c] * x[c];
        const W& a = row[last];
        if (a == 0) {
          if (s < 0) feasible = false;
        } else if (a > 0) {
          zhi = std::min(zhi, wfloor_div(s, a));
        } else {
          zlo = std::max(zlo, wceil_div(W(-s), W(-a)));
        }
        if (zlo > zhi) feasible = false;
      }
      if (feasible && zlo <= zhi) intervals.push_back({zlo, zhi});
    }

    if (!intervals.empty()) {
      std::sort(intervals.begin(), intervals.end(),
                [](const Interval<W>& a, const Interval<W>& b) { return a.lo < b.lo; });
      W cur_lo = intervals[0].lo, cur_hi = intervals[0].hi;
      for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].lo <= cur_hi + 1) {
          cur_hi = std::max(cur_hi, intervals[i].hi);
        } else {
          total += Int(cur_hi - cur_lo) + 1;
          cur_lo = intervals[i].lo;
          cur_hi = intervals[i].hi;
        }
      }
      total += Int(cur_hi - cur_lo) + 1;
    }

    if (last == 0) return total;  // single empty prefix

    std::size_t pos = last;
    bool advanced = false;
    while (pos > 0) {
      --pos;
      const W& bound = pos == 0 ? x0_hi : hi[pos];
      if (x[pos] < bound) {
        ++x[pos];
        for (std::size_t c = pos + 1; c < last; ++c) x[c] = lo[c];
        advanced = true;
        break;
      }
    }
    if (!advanced) return total;
  }
}

template <typename W>
Int count_with(const std::vector<CompiledPiece>& compiled, std::size_t n, const Int& k,
               int jobs) {
  std::vector<ScanPiece<W>> pieces;
  pieces.reserve(compiled.size());
  std::vector<Int> union_lo(n), union_hi(n);
  bool any = false;
  for (const auto& cp : compiled) {
    ScanPiece<W> sp;
    sp.rows.reserve(cp.rows.size());
    for (const auto& row : cp.rows) {
      std::vector<W> r;
      r.reserve(row.size());
      for (const auto& e : row) r.push_back(static_cast<W>(e));
      sp.rows.push_back(std::move(r));
    }
    for (const auto& e : cp.rhs) sp.rhs_k.push_back(static_cast<W>(Int(e * k)));

    auto [plo, phi] = dilate_box(cp, k);
    for (std::size_t c = 0; c < n; ++c) {
      if (plo[c] > phi[c]) sp.empty = true;
      sp.lo.push_back(static_cast<W>(plo[c]));
      sp.hi.push_back(static_cast<W>(phi[c]));
    }
    if (!sp.empty) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!any || plo[c] < union_lo[c]) union_lo[c] = plo[c];
        if (!any || phi[c] > union_hi[c]) union_hi[c] = phi[c];
      }
      any = true;
    }
    pieces.push_back(std::move(sp));
  }
  if (!any) return 0;

  std::vector<W> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = static_cast<W>(union_lo[c]);
    hi[c] = static_cast<W>(union_hi[c]);
  }

  const std::span<const ScanPiece<W>> pspan(pieces);
  if (n == 1 || jobs <= 1 || union_lo[0] >= union_hi[0]) {
    const W a = n == 1 ? W(0) : lo[0];
    const W b = n == 1 ? W(0) : hi[0];
    return scan_chunk<W>(pspan, lo, hi, a, b);
  }

  const Int width = union_hi[0] - union_lo[0] + 1;
  const Int want = std::min<Int>(width, Int(std::min(jobs, 64)));
  const int threads = static_cast<int>(want);
  std::vector<std::future<Int>> futures;
  futures.reserve(static_cast<std::size_t>(threads));
  Int begin = union_lo[0];
  for (int t = 0; t < threads; ++t) {
    Int end = union_lo[0] + (width * (t + 1)) / threads - 1;
    const W a = static_cast<W>(begin);
    const W b = static_cast<W>(end);
    futures.push_back(std::async(std::launch::async, [pspan, &lo, &hi, a, b]() {
      return scan_chunk<W>(pspan, std::span<const W>(lo), std::span<const W>(hi), a, b);
    }));
    begin = end + 1;
  }
  Int total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

Int count_impl(const std::vector<CompiledPiece>& compiled, std::size_t n, const Int& k,
               int jobs) {
  // Use machine integers when every intermediate provably fits; otherwise
  // fall back to arbitrary precision.  The bound covers the box coordinates,
  // the scaled right-hand sides, and every partial dot product.
  const Int limit = Int(1) << 62;
  bool fits = true;
  for (const auto& cp : compiled) {
    auto [plo, phi] = dilate_box(cp, k);
    std::vector<Int> extent(n);
    for (std::size_t c = 0; c < n && fits; ++c) {
      extent[c] = std::max(abs(plo[c]), abs(phi[c]));
      if (extent[c] >= limit) fits = false;
    }
    for (std::size_t r = 0; r < cp.rows.size() && fits; ++r) {
      Int bound = abs(Int(cp.rhs[r] * k));
      for (std::size_t c = 0; c < n; ++c) bound += abs(cp.rows[r][c]) * extent[c];
      if (bound >= limit) fits = false;
    }
    if (!fits) break;
  }
  if (fits) return count_with<long long>(compiled, n, k, jobs);
  return count_with<Int>(compiled, n, k, jobs);
}

}  // namespace

Int count_lattice_points(const VPolytope& target, const Int& k, int jobs) {
  if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (target.ambient_dim() == 0) return 1;
  if (!target.full_dimensional()) {
    throw NotFullDimensionalError("count requires a full-dimensional target");
  }
  std::vector<CompiledPiece> compiled{compile_piece(target)};
  return count_impl(compiled, static_cast<std::size_t>(target.ambient_dim()), k, jobs);
}

Int count_lattice_points(const PolytopalBall& target, const Int& k, int jobs) {
  if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<CompiledPiece> compiled;
  compiled.reserve(target.pieces().size());
  for (const auto& p : target.pieces()) compiled.push_back(compile_piece(p));
  return count_impl(compiled, static_cast<std::size_t>(target.ambient_dim()), k, jobs);
}

}  // namespace ehrlab
