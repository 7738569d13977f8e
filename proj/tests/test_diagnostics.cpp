#include <doctest.h>

#include <cmath>

#include "corestat/diagnostics.hpp"
#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"

using namespace corestat;
using A = DiscreteDist::Atoms;

TEST_CASE("condition report examples") {
  const auto r4 = check_size_form_conditions(4, 3);
  CHECK(r4.arithmetic_progression);
  CHECK(r4.a == -1);
  CHECK(r4.var_x == Rational(2, 3));

  const auto r10 = check_size_form_conditions(10, 3);
  CHECK(r10.max_covariance_ratio < 1);
  CHECK(r10.nondegenerate());
  CHECK(r10.root_at_minus_shift);
  CHECK(r10.arithmetic_progression);
  REQUIRE(r10.near_independence_ratio.has_value());
  REQUIRE(r10.boundedness_ratio.has_value());
  CHECK(*r10.boundedness_ratio > 0);

  // On a two-point support every g_i is affine in X.
  const auto r2 = check_size_form_conditions(8, 2);
  CHECK(r2.max_covariance_ratio == 1);
  CHECK_FALSE(r2.nondegenerate());

  CHECK_THROWS_AS(check_size_form_conditions(2, 3), Error);
  CHECK_THROWS_AS(check_size_form_conditions(5, 1), Error);
}

TEST_CASE("property: second differences vanish (n <= 50, d <= 5)") {
  for (int n = 3; n <= 50; ++n)
    for (int d = 2; d <= 5; ++d) {
      const auto r = check_size_form_conditions(n, d);
      CHECK(r.arithmetic_progression);
      CHECK(r.root_at_minus_shift);
      if (d >= 3) CHECK(r.nondegenerate());
    }
}

TEST_CASE("subset sums") {
  const auto h = hoeffding_cclt_dist(3, 1);
  CHECK(h.dist.atoms() == A{{1, 1}, {2, 1}, {3, 1}});
  CHECK(h.variance == Rational(2, 3));
  CHECK(h.formula_variance == Rational(2, 3));
  CHECK(h.d_K.has_value());

  for (int m : {0, 1, 7}) {
    const auto p = hoeffding_cclt_dist(m, 0);
    CHECK(p.dist == DiscreteDist::point_mass(0));
    CHECK_FALSE(p.d_K.has_value());
  }
  CHECK(hoeffding_cclt_dist(5, 5).dist == DiscreteDist::point_mass(15));

  const auto s = hoeffding_cclt_dist(6, 3);
  CHECK(s.dist.total() == 20);
  CHECK(s.dist.mean() == Rational(21, 2));
  const auto mom = moments(s.dist, 7);
  CHECK(mom.central[1] == 0);
  CHECK(mom.central[3] == 0);
  CHECK(mom.central[5] == 0);
  CHECK(mom.central[7] == 0);

  CHECK_THROWS_AS(subset_sum_dist(3, 4), Error);
  CHECK_THROWS_AS(subset_sum_dist(3, -1), Error);
}

TEST_CASE("property: subset-sum variance identity (m <= 30)") {
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto h = hoeffding_cclt_dist(m, k);
      CHECK(h.variance == h.formula_variance);
      CHECK(h.dist.total() == binomial(m, k));
    }
}

TEST_CASE("property: complementary subsets give mirrored sums") {
  for (int m = 1; m <= 12; ++m)
    for (int k = 0; k <= m; ++k)
      CHECK(subset_sum_dist(m, k).affine(-1, m * (m + 1) / 2) == subset_sum_dist(m, m - k));
}

TEST_CASE("concentration examples") {
  const auto zero = concentration_check(FamilySpec(Family::Strict, 9, 2), Statistic::length(), {0});
  CHECK(zero.points[0].probability == 1);
  CHECK(std::isinf(zero.points[0].witness));

  const auto l = concentration_check(FamilySpec(Family::Strict, 14, 2), Statistic::length(), {1, 2, 3, 4});
  CHECK(l.scale == 14 * 4);
  CHECK(l.has_finite_positive_constant());
  CHECK(l.constant == doctest::Approx(12.1658426).epsilon(1e-7));
  for (const auto& p : l.points)
    CHECK(to_double(p.probability) <= 2 * std::exp(-l.constant * p.radius * p.radius / l.scale) * (1 + 1e-12));

  const auto s = concentration_check(FamilySpec(Family::SelfConj, 12, 2), Statistic::size(), {1, 2, 3, 4});
  CHECK(s.scale == 12.0 * 12 * 12 * 16);
  CHECK(s.has_finite_positive_constant());
  CHECK(s.constant == doctest::Approx(6.94902967).epsilon(1e-7));
  CHECK(std::isinf(s.points[3].witness));

  CHECK_THROWS_AS(concentration_check(FamilySpec(Family::Strict, 9, 0), Statistic::length(), {1}), Error);
  CHECK_THROWS_AS(concentration_check(FamilySpec(Family::SelfConj, 6, 2), Statistic::power_sum(2), {1}), Error);
  CHECK_THROWS_AS(concentration_check(FamilySpec(Family::Strict, 9, 2), Statistic::length(), {-1}), Error);
}

TEST_CASE("property: tail probabilities are non-increasing in the radius") {
  for (int n = 4; n <= 12; ++n) {
    const auto r = concentration_check(FamilySpec(Family::Core, n, 2), Statistic::size(), {0, 0.5, 1, 1.5, 2, 3});
    for (std::size_t i = 1; i < r.points.size(); ++i)
      CHECK(r.points[i].probability <= r.points[i - 1].probability);
  }
}
