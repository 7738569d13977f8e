#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corestat/bigint.hpp"
#include "corestat/discrete_dist.hpp"
#include "corestat/family.hpp"

namespace corestat {

/// Law of the length statistic (Durfee length on SelfConj).
DiscreteDist dist_length(const FamilySpec& spec);

/// Law of the size statistic.
DiscreteDist dist_size(const FamilySpec& spec);

/// Law of the sum of h^k over the diagonal hooks of a uniform self-conjugate
/// n-core with perimeter <= 2en.
DiscreteDist dist_power_sum_selfconj(int n, int e, int k);

/// Dispatches on the statistic.
DiscreteDist distribution(const FamilySpec& spec, const Statistic& stat);

/// Size DP over positions 1..n-1. allowed[i-1] lists the admissible values
/// of x_i; when no_adjacent is set, two consecutive nonzero entries are
/// excluded. Each layer is a sparse map keyed by (last-nonzero, A, V) with
/// A = sum x and V = sum n x^2 + (2i - n + 1) x; size = (V - A^2) / 2.
DiscreteDist size_dp(int n, const std::vector<std::vector<int>>& allowed,
                     bool no_adjacent);

struct MomentReport {
  FamilySpec spec;
  Statistic stat;
  Rational mean;
  Rational variance;
  /// central[k] = E[(X - mean)^k], k = 0..k_max.
  std::vector<Rational> central;
  /// standardized[k] = central[k] / sigma^k; empty when variance == 0.
  std::vector<std::optional<double>> standardized;

  std::optional<double> standardized_moment(int k) const {
    if (k < 0 || k >= static_cast<int>(standardized.size())) return std::nullopt;
    return standardized[k];
  }
};

/// Exact central moments up to k_max; standardized values are formed at 50
/// significant digits and only then rounded to double.
MomentReport moments(const DiscreteDist& dist, int k_max);
MomentReport moments(const FamilySpec& spec, const Statistic& stat, int k_max);

/// Round half away from zero to `places` decimals.
double round_half_away(double value, int places);

/// tau({x_1 < ... < x_k}) = {x_1, x_2 + 1, ..., x_k + k - 1}; input is 1-based.
std::vector<int> tau_shift(std::vector<int> subset);

/// All subsets of {1..m} without two consecutive elements, in lexicographic order.
std::vector<std::vector<int>> nonadjacent_supports(int m);

/// A centered-coordinate form f(x) = sum_i g_i(x_i) + a sum_{i<j} x_i x_j + const,
/// with g_i(x) = quad * (x + c)^2 + linear[i] * (x + c) and c = (d + 1) / 2.
/// Coordinates x_i = y_i - c where y is the original vector.
struct CenteredForm {
  int n = 0;
  int d = 0;
  Rational a;
  Rational quad;
  std::vector<Rational> linear;  ///< indexed 1..n-1 (entry 0 unused)

  Rational shift() const { return Rational(d + 1, 2); }
  Rational g(int i, const Rational& x) const;
};

/// The length (a = 0, g_i = x + c) or size (a = -1) form on Core/Strict vectors.
CenteredForm centered_form(int n, int d, const Statistic& stat);

/// Support of X: {-(d-1)/2, -(d-3)/2, ..., (d-1)/2}.
std::vector<Rational> centered_support(int d);

struct ConditionalStat {
  DiscreteDist dist;
  Rational mean;             ///< from the distribution
  Rational variance;         ///< from the distribution
  Rational closed_mean;      ///< mu_J from the centered form
  Rational closed_variance;  ///< sigma_J^2 from the centered form
};

/// Law of the statistic over strict vectors whose nonzero coordinates are
/// exactly `support` (1-based, values in [d]), together with the closed-form
/// mixture-component mean and variance. Throws Error(AdjacentSupport).
ConditionalStat conditional_stat(int n, int d, const Statistic& stat,
                                 const std::vector<int>& support);

}  // namespace corestat
