#include "ehrlab/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ehrlab {

namespace {

Point unit_vector(int n, int index) {
  Point e(static_cast<std::size_t>(n), Rational(0));
  e[static_cast<std::size_t>(index)] = 1;
  return e;
}

Point scaled_unit(int n, int index, const Rational& c) {
  Point e(static_cast<std::size_t>(n), Rational(0));
  e[static_cast<std::size_t>(index)] = c;
  return e;
}

// conv{0, e_2, ..., e_m} in R^m.
VPolytope base_simplex(int m) {
  std::vector<Point> pts;
  pts.push_back(Point(static_cast<std::size_t>(m), Rational(0)));
  for (int j = 1; j < m; ++j) pts.push_back(unit_vector(m, j));
  return VPolytope::from_extreme_points(m, std::move(pts));
}

// conv{+-q e_1, e_3, ..., e_m} in R^m.
VPolytope pentagon_base(const Int& q, int m) {
  std::vector<Point> pts;
  pts.push_back(scaled_unit(m, 0, Rational(q)));
  pts.push_back(scaled_unit(m, 0, Rational(-q)));
  for (int j = 2; j < m; ++j) pts.push_back(unit_vector(m, j));
  return VPolytope::from_points(m, std::move(pts));  // q = 1 merges +-q with nothing, but stay safe
}

void check_period(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("period parameter p must be >= 1");
}

void check_block_params(int n, int i, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("block constructions need dimension n >= 2");
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("block index i must satisfy 1 <= i <= n-1 (got " +
                                std::to_string(i) + ")");
  }
  if (k < 1) throw std::invalid_argument("shift k must be >= 1");
}

void check_config(const CyclicConfig& config, int n) {
  if (config.max_index() != n) {
    throw std::invalid_argument("cyclic node set must hold n+1 = " + std::to_string(n + 1) +
                                " entries, got " + std::to_string(config.nodes.size()));
  }
}

void validate_params(const ConstructionParams& params) {
  if (params.n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (static_cast<int>(params.periods.size()) != params.n) {
    throw std::invalid_argument("expected " + std::to_string(params.n) + " periods, got " +
                                std::to_string(params.periods.size()));
  }
  for (auto p : params.periods) check_period(p);
  check_config(params.cyclic, params.n);
  if (params.shifts) {
    if (static_cast<int>(params.shifts->size()) != params.n) {
      throw std::invalid_argument("expected " + std::to_string(params.n) + " shifts");
    }
    for (auto k : *params.shifts) {
      if (k < 1) throw std::invalid_argument("shifts must be >= 1");
    }
  }
}

}  // namespace

CyclicConfig::CyclicConfig(std::vector<Int> nodes_) : nodes(std::move(nodes_)) {
  if (nodes.empty()) throw std::invalid_argument("cyclic node set must be nonempty");
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    if (!(nodes[j - 1] < nodes[j])) {
      throw std::invalid_argument("cyclic node set must be strictly increasing");
    }
  }
}

CyclicConfig CyclicConfig::standard(int n) {
  std::vector<Int> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) nodes.emplace_back(t);
  return CyclicConfig(std::move(nodes));
}

VPolytope segment(std::int64_t p) {
  check_period(p);
  return VPolytope::from_extreme_points(1, {{Rational(-1, p)}, {Rational(0)}});
}

VPolytope pentagon(std::int64_t p) {
  check_period(p);
  const Int q = Int(p) * p - p + 1;
  std::vector<Point> pts = {
      {Rational(q), Rational(0)},      {Rational(-q), Rational(0)},
      {Rational(q - 1), Rational(1)},  {Rational(-(q - 1)), Rational(1)},
      {Rational(0), Rational(q, p)},
  };
  return VPolytope::from_points(2, std::move(pts));
}

VPolytope cyclic_polytope(const CyclicConfig& config, int i) {
  if (i < 0 || i > config.max_index()) {
    throw std::invalid_argument("cyclic index out of range: i = " + std::to_string(i) +
                                " with " + std::to_string(config.nodes.size()) + " nodes");
  }
  if (i == 0) return VPolytope::unit_point();
  std::vector<Point> pts;
  pts.reserve(config.nodes.size());
  for (const auto& t : config.nodes) {
    Point x;
    x.reserve(static_cast<std::size_t>(i));
    Int power = 1;
    for (int j = 1; j <= i; ++j) {
      power *= t;
      x.emplace_back(power);
    }
    pts.push_back(std::move(x));
  }
  return VPolytope::from_points(i, std::move(pts));
}

Rational cyclic_volume(const CyclicConfig& config, int i) {
  if (i == 0) return 1;
  return volume(cyclic_polytope(config, i));
}

VPolytope left_summand(const CyclicConfig& config, int n, int i, std::int64_t p,
                       std::int64_t k) {
  check_block_params(n, i, k);
  check_period(p);
  check_config(config, n);
  const VPolytope block = product(cyclic_polytope(config, i), segment(p).pyr_power(n - i - 1));
  return block.translated(scaled_unit(n, i, Rational(-k)));
}

VPolytope left_facet(const CyclicConfig& config, int n, int i, std::int64_t k) {
  check_block_params(n, i, k);
  check_config(config, n);
  const VPolytope block = product(cyclic_polytope(config, i), base_simplex(n - i));
  return block.translated(scaled_unit(n, i, Rational(-k)));
}

VPolytope right_summand(const CyclicConfig& config, int n, int i, std::int64_t p,
                        std::int64_t k) {
  check_block_params(n, i, k);
  check_period(p);
  check_config(config, n);
  const VPolytope block =
      product(cyclic_polytope(config, i - 1), pentagon(p).pyr_power(n - i - 1));
  return block.translated(scaled_unit(n, i, Rational(k)));
}

VPolytope right_facet(const CyclicConfig& config, int n, int i, std::int64_t p,
                      std::int64_t k) {
  check_block_params(n, i, k);
  check_period(p);
  check_config(config, n);
  const Int q = Int(p) * p - p + 1;
  const VPolytope block = product(cyclic_polytope(config, i - 1), pentagon_base(q, n - i + 1));
  return block.translated(scaled_unit(n, i, Rational(k)));
}

VPolytope middle_single(const CyclicConfig& config, int n, int i, std::int64_t p,
                        std::int64_t k) {
  const VPolytope lf = left_facet(config, n, i, k);
  const VPolytope rf = right_facet(config, n, i, p, k);
  std::vector<Point> pts = lf.vertices();
  pts.insert(pts.end(), rf.vertices().begin(), rf.vertices().end());
  return VPolytope::from_points(n, std::move(pts));
}

VPolytope q0_piece(int n, std::int64_t p, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  check_period(p);
  if (k < 0) throw std::invalid_argument("shift k must be >= 0");
  return segment(p).pyr_power(n - 1).translated(scaled_unit(n, 0, Rational(-k)));
}

VPolytope q0_facet(int n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (k < 0) throw std::invalid_argument("shift k must be >= 0");
  return base_simplex(n).translated(scaled_unit(n, 0, Rational(-k)));
}

PolytopalBall build_qi(const CyclicConfig& config, int n, int i, std::int64_t p,
                       std::int64_t k) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  if (i < 0 || i > n - 1) {
    throw std::invalid_argument("degree index i must satisfy 0 <= i <= n-1");
  }
  check_period(p);
  if (i == 0) return PolytopalBall(n, {q0_piece(n, p, 0)});
  return PolytopalBall(n, {left_summand(config, n, i, p, k),
                           middle_single(config, n, i, p, k),
                           right_summand(config, n, i, p, k)});
}

std::vector<VPolytope> designated_facets(const ConstructionParams& params,
                                         const std::vector<std::int64_t>& shifts) {
  std::vector<VPolytope> facets;
  facets.push_back(q0_facet(params.n, shifts[0]));
  for (int i = 1; i <= params.n - 1; ++i) {
    facets.push_back(left_facet(params.cyclic, params.n, i, shifts[static_cast<std::size_t>(i)]));
    facets.push_back(right_facet(params.cyclic, params.n, i,
                                 params.periods[static_cast<std::size_t>(i)],
                                 shifts[static_cast<std::size_t>(i)]));
  }
  return facets;
}

VPolytope middle_glued(const ConstructionParams& params,
                       const std::vector<std::int64_t>& shifts) {
  std::vector<Point> pts;
  for (const auto& f : designated_facets(params, shifts)) {
    pts.insert(pts.end(), f.vertices().begin(), f.vertices().end());
  }
  return VPolytope::from_points(params.n, std::move(pts));
}

bool shifts_admissible(const ConstructionParams& params,
                       const std::vector<std::int64_t>& shifts) {
  if (params.n == 1) return true;  // no middle polytope exists in dimension 1
  const VPolytope m = middle_glued(params, shifts);
  for (const auto& f : designated_facets(params, shifts)) {
    if (!is_facet(f, m)) return false;
  }
  return true;
}

std::vector<std::int64_t> choose_shifts(const ConstructionParams& params) {
  validate_params(params);
  if (params.shifts) {
    throw std::invalid_argument("choose_shifts expects params without preset shifts");
  }
  const std::size_t n = static_cast<std::size_t>(params.n);
  if (params.n == 1) return {1};

  constexpr std::int64_t kBudget = 1 << 12;
  std::vector<std::int64_t> tuple(n, 1);
  bool found = false;
  for (std::int64_t uniform = 1; uniform <= kBudget; uniform *= 2) {
    tuple.assign(n, uniform);
    if (shifts_admissible(params, tuple)) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw ShiftSearchError("no admissible uniform shift tuple up to " + std::to_string(kBudget),
                           std::vector<std::int64_t>(n, kBudget));
  }

  // Coordinate-wise downward refinement: smallest passing value per entry,
  // earlier entries first, every candidate fully re-validated.
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::int64_t c = 1; c < tuple[idx]; ++c) {
      std::vector<std::int64_t> candidate = tuple;
      candidate[idx] = c;
      if (shifts_admissible(params, candidate)) {
        tuple = std::move(candidate);
        break;
      }
    }
  }
  return tuple;
}

QStarBuild build_qstar(const ConstructionParams& params) {
  validate_params(params);
  std::vector<std::int64_t> shifts;
  if (params.shifts) {
    shifts = *params.shifts;
    if (!shifts_admissible(params, shifts)) {
      throw FacetValidationError(
          "supplied shifts fail the designated facet checks for the glued middle polytope");
    }
  } else {
    ConstructionParams search = params;
    search.shifts.reset();
    shifts = choose_shifts(search);
  }

  std::vector<VPolytope> pieces;
  pieces.push_back(q0_piece(params.n, params.periods[0], shifts[0]));
  if (params.n >= 2) {
    pieces.push_back(middle_glued(params, shifts));
    for (int i = 1; i <= params.n - 1; ++i) {
      pieces.push_back(left_summand(params.cyclic, params.n, i,
                                    params.periods[static_cast<std::size_t>(i)],
                                    shifts[static_cast<std::size_t>(i)]));
      pieces.push_back(right_summand(params.cyclic, params.n, i,
                                     params.periods[static_cast<std::size_t>(i)],
                                     shifts[static_cast<std::size_t>(i)]));
    }
  }
  return {PolytopalBall(params.n, std::move(pieces)), std::move(shifts)};
}

}  // namespace ehrlab
