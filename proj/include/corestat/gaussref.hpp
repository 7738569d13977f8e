#pragma once

#include <string>
#include <vector>

#include "corestat/discrete_dist.hpp"
#include "corestat/family.hpp"

namespace corestat {

/// Phi(x) = erfc(-x / sqrt 2) / 2, clamped to [0, 1].
double normal_cdf(double x);
/// 1 - Phi(x), without cancellation for large x.
double normal_upper(double x);
double normal_pdf(double x);

/// Phi^{-1}(p) for p in (0, 1) by bisection to 1e-13. The upper-tail form
/// is used above 1/2 so that p close to 1 keeps its resolution; pass
/// one_minus_p explicitly when it is known exactly.
double normal_quantile(double p);
double normal_quantile(double p, double one_minus_p);

/// sup |F - Phi| after standardizing `dist` by its exact mean and sd.
/// Throws Error(ZeroVariance) on a point mass.
double kolmogorov_to_normal(const DiscreteDist& dist);

/// integral |F - Phi| after standardization, evaluated plateau by plateau with
/// closed antiderivatives. Throws Error(ZeroVariance) on a point mass.
double wasserstein_to_normal(const DiscreteDist& dist);

struct NormalDistanceResult {
  FamilySpec spec;
  Statistic stat;
  double d_K = 0;
  double d_W = 0;
  double sqrtn_dK = 0;
  double sqrtn_dW = 0;
};

NormalDistanceResult normal_distances(const FamilySpec& spec, const Statistic& stat);

/// One row per n in [n_lo, n_hi].
std::vector<NormalDistanceResult> rate_table(Family family, const Statistic& stat,
                                             int cap, int n_lo, int n_hi,
                                             int jobs = 1);

/// Header family,stat,cap,n,dK,dW,sqrtn_dK,sqrtn_dW then one line per row.
std::string rate_table_csv(const std::vector<NormalDistanceResult>& rows);

struct NormalPairGap {
  double d_K = 0;
  double d_W = 0;
  double bound_K = 0;
  double bound_W = 0;
  bool within_bounds() const { return d_K <= bound_K + 1e-15 && d_W <= bound_W + 1e-15; }
};

/// Distances between N(mu, s1^2) and N(mu, s2^2). d_K is the larger of the
/// value at the density crossing and a dense scan with step 1e-4; d_W is
/// |s1 - s2| sqrt(2/pi). Throws Error(ZeroVariance) when s1 == s2 == 0.
NormalPairGap normal_pair_gap(double mu, double s1, double s2);

}  // namespace corestat
