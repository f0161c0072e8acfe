#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ehrlab/errors.hpp"
#include "ehrlab/quasipoly.hpp"

using namespace ehrlab;

namespace {

PeriodicFunction pf(std::vector<Rational> v) { return PeriodicFunction(std::move(v)); }

// Ehrhart quasi-polynomial of [-1/p, 0] from the closed-form count
// floor(k/p) + 1:  (1/p) t + c_0  with  c_0(r) = 1 - r/p  for r = 0..p-1.
QuasiPolynomial segment_qp(std::int64_t p) {
  std::vector<Rational> c0;
  for (std::int64_t r = 0; r < p; ++r) c0.emplace_back(Rational(p - r, p));
  return QuasiPolynomial({pf(std::move(c0)), pf({Rational(1, p)})});
}

Int floor_count(std::int64_t k, std::int64_t p) { return Int(k / p) + 1; }

QuasiPolynomial random_qp(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg_d(0, 3);
  std::uniform_int_distribution<int> per_pick(0, 4);
  std::uniform_int_distribution<int> num_d(-5, 5);
  std::uniform_int_distribution<int> den_d(1, 3);
  const std::int64_t periods[] = {1, 2, 3, 4, 6};
  std::vector<PeriodicFunction> coeffs;
  const int deg = deg_d(rng);
  for (int i = 0; i <= deg; ++i) {
    const std::int64_t s = periods[per_pick(rng)];
    std::vector<Rational> values;
    for (std::int64_t j = 0; j < s; ++j) values.emplace_back(num_d(rng), den_d(rng));
    coeffs.emplace_back(std::move(values));
  }
  return QuasiPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("minimal period") {
  CHECK(pf({1, Rational(1, 2), 1, Rational(1, 2)}).minimal_period() == 2);
  CHECK(pf({5, 5, 5}).minimal_period() == 1);
  CHECK(pf({1, 2, 3}).minimal_period() == 3);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> s_d(1, 12), v_d(0, 2);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Rational> values;
    const int s = s_d(rng);
    for (int j = 0; j < s; ++j) values.emplace_back(v_d(rng));
    const PeriodicFunction f(values);
    CHECK(f.period() % f.minimal_period() == 0);
    // The reduction must still be the same function.
    const PeriodicFunction r = f.reduced();
    for (int k = -15; k <= 15; ++k) CHECK(f(Int(k)) == r(Int(k)));
  }
}

TEST_CASE("addition") {
  const QuasiPolynomial t = QuasiPolynomial::monomial(1, 1);
  const QuasiPolynomial one = QuasiPolynomial::constant(1);
  const QuasiPolynomial sum = t + one;
  CHECK(sum.degree() == 1);
  CHECK(sum(Int(4)) == 5);

  // Periodic parts cancel down to the constant 1.
  const QuasiPolynomial a({pf({1, Rational(1, 2)}), pf({Rational(1, 2)})});
  const QuasiPolynomial b({pf({0, Rational(1, 2)}), pf({Rational(-1, 2)})});
  const QuasiPolynomial c = a + b;
  CHECK(c.degree() == 0);
  CHECK(c == QuasiPolynomial::constant(1));

  const QuasiPolynomial s2 = segment_qp(2), s3 = segment_qp(3);
  CHECK((s2 + s3)(Int(6)) == Rational(floor_count(6, 2) + floor_count(6, 3)));
  CHECK((s2 + s3)(Int(6)) == 7);
}

TEST_CASE("multiplication") {
  const QuasiPolynomial lin = QuasiPolynomial::monomial(2, 1) + QuasiPolynomial::constant(1);
  const QuasiPolynomial sq = lin * lin;
  const QuasiPolynomial expected = QuasiPolynomial::monomial(4, 2) +
                                   QuasiPolynomial::monomial(4, 1) +
                                   QuasiPolynomial::constant(1);
  CHECK(sq == expected);

  const QuasiPolynomial s2 = segment_qp(2);
  CHECK(s2 * QuasiPolynomial::constant(1) == s2);

  // Product vs direct count over the square [-k/2, 0]^2.
  const QuasiPolynomial square_qp = s2 * s2;
  for (std::int64_t k = 1; k <= 8; ++k) {
    Int pts = 0;
    for (std::int64_t x = -k; x <= 0; ++x) {
      for (std::int64_t y = -k; y <= 0; ++y) {
        if (2 * x >= -k && 2 * y >= -k) ++pts;
      }
    }
    CHECK(square_qp(Int(k)) == Rational(pts));
  }
}

TEST_CASE("equivalence") {
  const QuasiPolynomial t = QuasiPolynomial::monomial(1, 1);
  CHECK(equivalent(t, t + QuasiPolynomial::constant(7)));

  const QuasiPolynomial periodic({pf({0}), pf({1, Rational(1, 2)})});
  const QuasiPolynomial flat({pf({0}), pf({1})});
  CHECK_FALSE(equivalent(periodic, flat));

  // Pentagon vs segment for p = 2, both from hand-verified closed forms:
  // 6t^2 + (9/2)t + [1, 3/2]  against  -((1/2)t + [1, 1/2]).
  const QuasiPolynomial pentagon2({pf({1, Rational(3, 2)}), pf({Rational(9, 2)}), pf({6})});
  CHECK(equivalent(pentagon2, -segment_qp(2)));
  CHECK_FALSE(equivalent(pentagon2, segment_qp(2)));
}

TEST_CASE("equivalence is a congruence") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const QuasiPolynomial q = random_qp(rng);
    const QuasiPolynomial r = random_qp(rng);
    const QuasiPolynomial s = random_qp(rng);
    CHECK(equivalent(q, q));
    CHECK(equivalent(q, r) == equivalent(r, q));
    if (equivalent(q, r) && equivalent(r, s)) CHECK(equivalent(q, s));

    // Adding any honest polynomial to one side changes nothing.
    const QuasiPolynomial poly =
        QuasiPolynomial::monomial(Rational(iter % 5 - 2), iter % 3) + QuasiPolynomial::constant(3);
    CHECK(equivalent(q, r) == equivalent(q + poly, r));

    // Substitution: multiplication by a period-1 quasi-polynomial preserves
    // equivalence.
    if (equivalent(q, r)) {
      CHECK(equivalent(poly * q, poly * r));
    }
  }
}

TEST_CASE("period sequence") {
  const QuasiPolynomial unit_square = QuasiPolynomial::monomial(1, 2) +
                                      QuasiPolynomial::monomial(2, 1) +
                                      QuasiPolynomial::constant(1);
  CHECK(unit_square.period_sequence() == PeriodSequence{{1, 1, 1}});

  CHECK(segment_qp(2).period_sequence() == PeriodSequence{{2, 1}});
  CHECK(segment_qp(2).period_sequence().str() == "2,1");

  // Non-minimal representations canonicalize to the same sequence.
  const QuasiPolynomial redundant(
      {pf({1, Rational(1, 2), 1, Rational(1, 2)}), pf({Rational(1, 2), Rational(1, 2)})});
  CHECK(redundant.period_sequence() == PeriodSequence{{2, 1}});
  CHECK(redundant == segment_qp(2));
}

TEST_CASE("interpolation") {
  SUBCASE("segment counts, period 2") {
    const std::vector<std::pair<Int, Rational>> samples = {
        {1, 1}, {2, 2}, {3, 2}, {4, 3}};
    for (const auto& [k, v] : samples) {
      REQUIRE(Rational(floor_count(static_cast<std::int64_t>(k), 2)) == v);
    }
    const QuasiPolynomial qp = interpolate(samples, 1, 2);
    CHECK(qp == segment_qp(2));
  }

  SUBCASE("constant") {
    const QuasiPolynomial qp = interpolate({{1, 1}, {2, 1}, {3, 1}}, 0, 1);
    CHECK(qp == QuasiPolynomial::constant(1));
  }

  SUBCASE("integral triangle counts") {
    const QuasiPolynomial qp = interpolate({{1, 4}, {2, 9}, {3, 16}}, 2, 1);
    const QuasiPolynomial expected = QuasiPolynomial::monomial(1, 2) +
                                     QuasiPolynomial::monomial(2, 1) +
                                     QuasiPolynomial::constant(1);
    CHECK(qp == expected);
  }

  SUBCASE("insufficient samples name the residue class") {
    try {
      interpolate({{1, 1}, {2, 2}, {3, 2}}, 1, 2);
      FAIL("expected InsufficientSamplesError");
    } catch (const InsufficientSamplesError& e) {
      CHECK(e.residue == 0);  // only k = 2 hits the even class
      CHECK(e.have == 1);
      CHECK(e.need == 2);
    }
  }

  SUBCASE("inconsistent surplus samples are rejected") {
    CHECK_THROWS_AS(interpolate({{1, 1}, {2, 1}, {3, 1}, {4, 2}}, 0, 1), Error);
  }

  SUBCASE("sample-interpolate round trip") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
      const QuasiPolynomial qp = random_qp(rng);
      std::int64_t s = 1;
      for (const auto& c : qp.coefficients()) s = std::lcm(s, c.period());
      const int n = qp.degree();
      std::vector<std::pair<Int, Rational>> samples;
      for (std::int64_t k = 1; k <= s * (n + 1); ++k) samples.emplace_back(k, qp(Int(k)));
      CHECK(interpolate(samples, n, s) == qp);
    }
  }
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 60; ++iter) {
    const QuasiPolynomial a = random_qp(rng);
    const QuasiPolynomial b = random_qp(rng);
    const QuasiPolynomial sum = a + b;
    const QuasiPolynomial prod = a * b;
    const QuasiPolynomial diff = a - b;
    for (int k = -10; k <= 10; ++k) {
      const Int kk(k);
      CHECK(sum(kk) == a(kk) + b(kk));
      CHECK(prod(kk) == a(kk) * b(kk));
      CHECK(diff(kk) == a(kk) - b(kk));
    }
  }
}
