#include "corestat/gaussref.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"

namespace corestat {

namespace {

using Real = long double;

constexpr Real kInvSqrt2 = 0.707106781186547524400844362104849039L;
constexpr Real kInvSqrt2Pi = 0.398942280401432677939946059934381868L;

Real cdf(Real x) { return 0.5L * std::erfc(-x * kInvSqrt2); }
Real upper(Real x) { return 0.5L * std::erfc(x * kInvSqrt2); }
Real pdf(Real x) { return kInvSqrt2Pi * std::exp(-0.5L * x * x); }

// G(t) = t Phi(t) + phi(t) = integral of Phi over (-inf, t]; used for t <= 0.
Real lower_antiderivative(Real t) { return t * cdf(t) + pdf(t); }
// H(t) = phi(t) - t Q(t) = integral of Q over [t, inf); used for t >= 0.
Real upper_antiderivative(Real t) { return pdf(t) - t * upper(t); }

// integral over [a, b] of (c - Phi), with omc = 1 - c supplied exactly.
Real plateau_signed(Real a, Real b, Real c, Real omc) {
  if (b <= a) return 0;
  if (b <= 0) return c * (b - a) - (lower_antiderivative(b) - lower_antiderivative(a));
  if (a >= 0) return (upper_antiderivative(a) - upper_antiderivative(b)) - omc * (b - a);
  return plateau_signed(a, 0, c, omc) + plateau_signed(0, b, c, omc);
}

Real quantile(Real p, Real omp) {
  Real lo = -40, hi = 40;
  const bool use_upper = p > 0.5L;
  while (hi - lo > 1e-13L) {
    const Real mid = 0.5L * (lo + hi);
    const bool below = use_upper ? upper(mid) > omp : cdf(mid) < p;
    (below ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

struct Standardized {
  std::vector<Real> points;
  std::vector<Real> cum;      // F at each point
  std::vector<Real> cum_omc;  // 1 - F at each point, exact before rounding
};

Standardized standardize(const DiscreteDist& dist) {
  const Rational var = dist.variance();
  if (var == 0)
    throw Error(ErrorKind::ZeroVariance, "distance to normal needs positive variance");
  const Rational mean = dist.mean();
  const Real sd = std::sqrt(to_long_double(var));
  Standardized s;
  BigInt running = 0;
  const BigInt& total = dist.total();
  for (const auto& [v, w] : dist.atoms()) {
    running += w;
    s.points.push_back(to_long_double(Rational(v) - mean) / sd);
    s.cum.push_back(to_long_double(Rational(running, total)));
    s.cum_omc.push_back(to_long_double(Rational(total - running, total)));
  }
  return s;
}

}  // namespace

double normal_cdf(double x) { return std::clamp(static_cast<double>(cdf(x)), 0.0, 1.0); }
double normal_upper(double x) { return std::clamp(static_cast<double>(upper(x)), 0.0, 1.0); }
double normal_pdf(double x) { return static_cast<double>(pdf(x)); }

double normal_quantile(double p) { return normal_quantile(p, 1.0 - p); }

double normal_quantile(double p, double one_minus_p) {
  if (!(p > 0 && p < 1))
    throw Error(ErrorKind::InvalidArgument, "quantile level must lie in (0, 1)");
  return static_cast<double>(quantile(p, one_minus_p));
}

double kolmogorov_to_normal(const DiscreteDist& dist) {
  const Standardized s = standardize(dist);
  Real best = 0;
  Real before = 0;
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    const Real phi = cdf(s.points[j]);
    best = std::max({best, std::fabs(before - phi), std::fabs(s.cum[j] - phi)});
    before = s.cum[j];
  }
  return static_cast<double>(best);
}

double wasserstein_to_normal(const DiscreteDist& dist) {
  const Standardized s = standardize(dist);
  const std::size_t m = s.points.size();
  Real total = lower_antiderivative(s.points.front()) +
               upper_antiderivative(s.points.back());
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const Real a = s.points[j], b = s.points[j + 1];
    const Real c = s.cum[j], omc = s.cum_omc[j];
    const Real t = std::clamp(quantile(c, omc), a, b);
    // Phi < c left of the crossing, Phi > c right of it.
    total += std::fabs(plateau_signed(a, t, c, omc)) +
             std::fabs(plateau_signed(t, b, c, omc));
  }
  return static_cast<double>(total);
}

NormalDistanceResult normal_distances(const FamilySpec& spec, const Statistic& stat) {
  const DiscreteDist dist = distribution(spec, stat);
  NormalDistanceResult r;
  r.spec = spec;
  r.stat = stat;
  r.d_K = kolmogorov_to_normal(dist);
  r.d_W = wasserstein_to_normal(dist);
  const double root = std::sqrt(static_cast<double>(spec.n));
  r.sqrtn_dK = root * r.d_K;
  r.sqrtn_dW = root * r.d_W;
  return r;
}

std::vector<NormalDistanceResult> rate_table(Family family, const Statistic& stat,
                                             int cap, int n_lo, int n_hi, int jobs) {
  if (n_lo > n_hi) throw Error(ErrorKind::InvalidArgument, "empty n range");
  require_supported(family, stat);
  std::vector<NormalDistanceResult> rows(n_hi - n_lo + 1);
  const int workers = std::max(1, jobs);
  for (int start = n_lo; start <= n_hi; start += workers) {
    std::vector<std::future<NormalDistanceResult>> batch;
    for (int n = start; n <= std::min(n_hi, start + workers - 1); ++n)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [=] { return normal_distances(FamilySpec(family, n, cap), stat); }));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start - n_lo + i] = batch[i].get();
  }
  return rows;
}

std::string rate_table_csv(const std::vector<NormalDistanceResult>& rows) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "family,stat,cap,n,dK,dW,sqrtn_dK,sqrtn_dW\n";
  out.precision(12);
  for (const auto& r : rows)
    out << to_string(r.spec.family) << ',' << to_string(r.stat) << ',' << r.spec.cap
        << ',' << r.spec.n << ',' << r.d_K << ',' << r.d_W << ',' << r.sqrtn_dK << ','
        << r.sqrtn_dW << '\n';
  return out.str();
}

NormalPairGap normal_pair_gap(double mu, double s1, double s2) {
  (void)mu;  // both distances are translation invariant
  s1 = std::fabs(s1);
  s2 = std::fabs(s2);
  if (s1 == 0 && s2 == 0)
    throw Error(ErrorKind::ZeroVariance, "both variances are zero");
  NormalPairGap g;
  const double hi = std::max(s1, s2);
  const double diff2 = std::fabs(s1 * s1 - s2 * s2);
  g.bound_K = diff2 / (hi * hi);
  g.bound_W = std::sqrt(2.0 / std::numbers::pi) * diff2 / hi;
  g.d_W = std::fabs(s1 - s2) * std::sqrt(2.0 / std::numbers::pi);
  if (s1 == s2) return g;

  auto gap = [&](double x) {
    const double f1 = s1 == 0 ? (x >= 0 ? 1.0 : 0.0) : normal_cdf(x / s1);
    const double f2 = s2 == 0 ? (x >= 0 ? 1.0 : 0.0) : normal_cdf(x / s2);
    return std::fabs(f1 - f2);
  };
  if (s1 == 0 || s2 == 0) {
    g.d_K = 0.5;  // the jump of the point mass at the common mean
  } else {
    const double x2 = 2 * s1 * s1 * s2 * s2 * std::log(s1 / s2) / (s1 * s1 - s2 * s2);
    g.d_K = gap(std::sqrt(x2));
  }
  const double step = 1e-4;
  for (double x = -10 * hi; x <= 10 * hi; x += step) g.d_K = std::max(g.d_K, gap(x));
  return g;
}

}  // namespace corestat
