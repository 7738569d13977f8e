#pragma once

#include <optional>
#include <vector>

#include "corestat/bigint.hpp"
#include "corestat/discrete_dist.hpp"
#include "corestat/family.hpp"

namespace corestat {

/// Exact witnesses for the four hypotheses of the general normality result,
/// instantiated with the size form (a = -1) over X uniform on the centered
/// d-point support.
struct ConditionReport {
  int n = 0;
  int d = 0;
  Rational a;
  Rational var_x;
  /// Condition 2: second differences of g_i(x) in i vanish for every x.
  bool arithmetic_progression = false;
  /// g_i(-(d+1)/2) == 0 for every i.
  bool root_at_minus_shift = false;
  Rational inf_var_g;
  Rational sup_g_squared;
  /// Condition 1 witness a^2 n^2 d^4 / inf Var g_i; nullopt when inf Var is 0.
  std::optional<Rational> near_independence_ratio;
  /// Condition 3 witness sup g^2 / inf Var g_i; nullopt when inf Var is 0.
  std::optional<Rational> boundedness_ratio;
  /// Condition 4 witness max_i Cov(X, g_i)^2 / (Var X Var g_i) over i with
  /// Var g_i > 0.
  Rational max_covariance_ratio;

  bool nondegenerate() const { return max_covariance_ratio < 1; }
};

/// Requires n >= 3 and d >= 2.
ConditionReport check_size_form_conditions(int n, int d);

struct TailPoint {
  double sigma_multiple = 0;
  double radius = 0;
  Rational probability;  ///< exact P(|X - E X| >= radius)
  /// Largest C with probability <= 2 exp(-C r^2 / scale); +inf when the
  /// probability or the radius is 0.
  double witness = 0;
};

struct TailReport {
  FamilySpec spec;
  Statistic stat;
  double scale = 0;  ///< n cap^2 for lengths, n^3 cap^4 for sizes
  double sigma = 0;
  std::vector<TailPoint> points;
  /// min of the per-point witnesses: the largest C valid on the whole grid.
  double constant = 0;

  bool has_finite_positive_constant() const;
};

/// Radii are multiples of the exact standard deviation; the comparison
/// |X - E X| >= j sigma is decided exactly as (X - E X)^2 >= j^2 Var X.
TailReport concentration_check(const FamilySpec& spec, const Statistic& stat,
                               const std::vector<double>& sigma_multiples);

/// Law of the sum of a uniform random k-subset of {1..m}.
DiscreteDist subset_sum_dist(int m, int k);

struct HoeffdingReport {
  int m = 0;
  int k = 0;
  DiscreteDist dist;
  Rational variance;
  Rational formula_variance;  ///< k (m - k) (m + 1) / 12
  /// Distances to the normal and their sqrt(k (m - k) / m) scalings; absent
  /// for k in {0, m}.
  std::optional<double> d_K, d_W, scaled_dK, scaled_dW;
};

HoeffdingReport hoeffding_cclt_dist(int m, int k);

}  // namespace corestat
