#include "corestat/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"
#include "corestat/gaussref.hpp"

namespace corestat {

ConditionReport check_size_form_conditions(int n, int d) {
  if (n < 3 || d < 2) throw Error(ErrorKind::InvalidArgument, "conditions need n >= 3, d >= 2");
  const CenteredForm form = centered_form(n, d, Statistic::size());
  const auto xs = centered_support(d);
  const Rational inv(1, d);

  ConditionReport r;
  r.n = n;
  r.d = d;
  r.a = form.a;
  r.var_x = 0;
  for (const auto& x : xs) r.var_x += x * x * inv;

  r.arithmetic_progression = true;
  for (const auto& x : xs)
    for (int i = 2; i + 1 < n; ++i)
      if (form.g(i + 1, x) - 2 * form.g(i, x) + form.g(i - 1, x) != 0)
        r.arithmetic_progression = false;

  r.root_at_minus_shift = true;
  for (int i = 1; i < n; ++i)
    if (form.g(i, -form.shift()) != 0) r.root_at_minus_shift = false;

  r.sup_g_squared = 0;
  r.max_covariance_ratio = 0;
  bool first = true;
  for (int i = 1; i < n; ++i) {
    Rational eg = 0, eg2 = 0, egx = 0;
    for (const auto& x : xs) {
      const Rational g = form.g(i, x);
      eg += g * inv;
      eg2 += g * g * inv;
      egx += g * x * inv;
      if (g * g > r.sup_g_squared) r.sup_g_squared = g * g;
    }
    const Rational var_g = eg2 - eg * eg;
    if (first || var_g < r.inf_var_g) r.inf_var_g = var_g;
    first = false;
    if (var_g > 0) {
      const Rational ratio = egx * egx / (r.var_x * var_g);  // E X == 0
      if (ratio > r.max_covariance_ratio) r.max_covariance_ratio = ratio;
    }
  }
  if (r.inf_var_g > 0) {
    const Rational nd = Rational(n) * n * d * d * d * d;
    r.near_independence_ratio = r.a * r.a * nd / r.inf_var_g;
    r.boundedness_ratio = r.sup_g_squared / r.inf_var_g;
  }
  return r;
}

bool TailReport::has_finite_positive_constant() const {
  return std::isfinite(constant) && constant > 0;
}

TailReport concentration_check(const FamilySpec& spec, const Statistic& stat,
                               const std::vector<double>& sigma_multiples) {
  const DiscreteDist dist = distribution(spec, stat);
  const bool is_size = stat.kind == Statistic::Kind::Size ||
                       (stat.kind == Statistic::Kind::PowerSum && stat.power == 1);
  const bool is_length = stat.kind == Statistic::Kind::Length ||
                         stat.kind == Statistic::Kind::Durfee ||
                         (stat.kind == Statistic::Kind::PowerSum && stat.power == 0);
  if (!is_size && !is_length)
    throw Error(ErrorKind::UnsupportedStatistic, "concentration scales exist for length and size only");
  const double n = spec.n, cap = spec.cap;
  if (cap == 0) throw Error(ErrorKind::ZeroVariance, "cap 0 gives a point mass");

  TailReport rep;
  rep.spec = spec;
  rep.stat = stat;
  rep.scale = is_size ? n * n * n * cap * cap * cap * cap : n * cap * cap;
  const Rational mean = dist.mean();
  const Rational var = dist.variance();
  rep.sigma = std::sqrt(to_double(var));
  rep.constant = std::numeric_limits<double>::infinity();
  for (double j : sigma_multiples) {
    if (!(j >= 0)) throw Error(ErrorKind::InvalidArgument, "sigma multiples must be non-negative");
    TailPoint p;
    p.sigma_multiple = j;
    p.radius = j * rep.sigma;
    const Rational threshold = Rational(j) * Rational(j) * var;
    p.probability = 0;
    for (const auto& [v, w] : dist.atoms()) {
      const Rational dev = Rational(v) - mean;
      if (dev * dev >= threshold) p.probability += Rational(w, dist.total());
    }
    // At r = 0 the bound reads P <= 2 and holds for every C.
    p.witness = p.probability == 0 || j == 0
                    ? std::numeric_limits<double>::infinity()
                    : std::log(2.0 / to_double(p.probability)) * rep.scale / (p.radius * p.radius);
    rep.constant = std::min(rep.constant, p.witness);
    rep.points.push_back(p);
  }
  return rep;
}

DiscreteDist subset_sum_dist(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw Error(ErrorKind::InvalidArgument, "need 0 <= k <= m");
  // layer[j] maps a sum to the number of j-subsets of {1..i} with that sum.
  std::vector<DiscreteDist::Atoms> layer(k + 1);
  layer[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = std::min(i, k); j >= 1; --j)
      for (const auto& [s, w] : layer[j - 1]) layer[j][s + i] += w;
  return DiscreteDist(layer[k]);
}

HoeffdingReport hoeffding_cclt_dist(int m, int k) {
  HoeffdingReport r;
  r.m = m;
  r.k = k;
  r.dist = subset_sum_dist(m, k);
  r.variance = r.dist.variance();
  r.formula_variance = Rational(BigInt(k) * (m - k) * (m + 1), 12);
  if (k > 0 && k < m) {
    const double scale = std::sqrt(double(k) * (m - k) / m);
    r.d_K = kolmogorov_to_normal(r.dist);
    r.d_W = wasserstein_to_normal(r.dist);
    r.scaled_dK = scale * *r.d_K;
    r.scaled_dW = scale * *r.d_W;
  }
  return r;
}

}  // namespace corestat
