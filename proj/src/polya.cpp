#include "corestat/polya.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corestat/error.hpp"

namespace corestat {

namespace {

HighFloat evaluate(const std::vector<BigInt>& a, const HighFloat& z) {
  HighFloat acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + HighFloat(*it);
  return acc;
}

// Exact sign of p at a long double point: Horner in long double with a
// running rounding bound, falling back to rational arithmetic when the
// value is inside the bound. Every long double is a dyadic rational.
class SignOracle {
 public:
  explicit SignOracle(const std::vector<BigInt>& a) : exact_(a) {
    for (const auto& c : a) approx_.push_back(static_cast<long double>(HighFloat(c)));
  }

  int operator()(long double z) const {
    long double acc = 0, scale = 0;
    const long double az = std::fabs(z);
    for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) {
      acc = acc * z + *it;
      scale = scale * az + std::fabs(*it);
    }
    const long double m = static_cast<long double>(approx_.size());
    const long double bound = 4 * m * std::numeric_limits<long double>::epsilon() * scale;
    if (acc > bound) return 1;
    if (acc < -bound) return -1;
    Rational zq(0), acc_q(0);
    zq = Rational(HighFloat(z).convert_to<Rational>());
    for (auto it = exact_.rbegin(); it != exact_.rend(); ++it) acc_q = acc_q * zq + Rational(*it);
    return acc_q > 0 ? 1 : (acc_q < 0 ? -1 : 0);
  }

 private:
  std::vector<BigInt> exact_;
  std::vector<long double> approx_;
};

// Cauchy bound: every root satisfies |z| < 1 + max |a_k / a_m|.
long double cauchy_bound(const std::vector<BigInt>& a) {
  HighFloat worst = 0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    worst = std::max(worst, HighFloat(HighFloat(abs(a[k])) / HighFloat(a.back())));
  return static_cast<long double>(worst) + 1;
}

// Geometric grid on [-bound, -bound * 1e-15] plus 0, ascending.
std::vector<long double> negative_grid(long double bound, int steps) {
  std::vector<long double> g;
  for (int j = 0; j <= steps; ++j)
    g.push_back(-bound * std::pow(10.0L, -15.0L * j / steps));
  g.push_back(0);
  return g;
}

}  // namespace

PFSequence::PFSequence(std::vector<BigInt> coeffs) : coefficients(std::move(coeffs)) {
  for (const auto& c : coefficients)
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative PF coefficient");
  if (total() == 0) throw Error(ErrorKind::InvalidArgument, "PF sequence sums to zero");
}

BigInt PFSequence::total() const {
  BigInt t = 0;
  for (const auto& c : coefficients) t += c;
  return t;
}

PFSequence u_sequence(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorKind::InvalidArgument, "U needs n >= 2, d >= 1");
  std::vector<BigInt> w;
  for (int k = 0; k <= n / 2; ++k)
    w.push_back(binomial(n - k, k) * pow(BigInt(d), static_cast<unsigned>(k)));
  return PFSequence(std::move(w));
}

DiscreteDist u_distribution(int n, int d) {
  const PFSequence seq = u_sequence(n, d);
  DiscreteDist::Atoms atoms;
  for (int k = 0; k <= seq.degree(); ++k) atoms[k] = seq.coefficients[k];
  return DiscreteDist(std::move(atoms));
}

RootCertificate pf_real_roots(const PFSequence& seq) {
  auto a = seq.coefficients;
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  const int m = static_cast<int>(a.size()) - 1;
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "polynomial has degree zero");

  RootCertificate cert;
  cert.degree = m;
  const SignOracle sign(a);
  // Non-negative coefficients leave no root in (0, inf); the grid covers the
  // negative half-line, densifying until each root owns a sign change.
  std::vector<long double> grid;
  std::vector<int> signs;
  for (int steps = 4096; steps <= (1 << 20); steps *= 4) {
    grid = negative_grid(cauchy_bound(a), steps);
    signs.clear();
    for (long double z : grid) signs.push_back(sign(z));
    cert.brackets.clear();
    cert.roots.clear();
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      if (signs[j] == 0) cert.roots.push_back(static_cast<double>(grid[j]));
      if (signs[j] != 0 && signs[j + 1] != 0 && signs[j] != signs[j + 1])
        cert.brackets.push_back(static_cast<double>(grid[j]));
    }
    if (static_cast<int>(cert.brackets.size() + cert.roots.size()) >= m) break;
  }
  cert.sign_change_roots = static_cast<int>(cert.brackets.size() + cert.roots.size());
  if (cert.sign_change_roots != m)
    throw Error(ErrorKind::NonRealRoot,
                "found " + std::to_string(cert.sign_change_roots) +
                    " real roots for a polynomial of degree " + std::to_string(m));

  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    if (signs[j] == 0 || signs[j + 1] == 0 || signs[j] == signs[j + 1]) continue;
    long double lo = grid[j], hi = grid[j + 1];
    while (hi - lo > 1e-12L * std::max(1.0L, std::fabs(lo))) {
      const long double mid = 0.5L * (lo + hi);
      const int s = sign(mid);
      if (s == 0) { lo = hi = mid; break; }
      (s == signs[j] ? lo : hi) = mid;
    }
    cert.roots.push_back(static_cast<double>(0.5L * (lo + hi)));
  }
  std::sort(cert.roots.begin(), cert.roots.end());

  for (double z : cert.roots) {
    const HighFloat hz(z);
    HighFloat scale = 0, power = 1;
    for (const auto& c : a) {
      scale += HighFloat(c) * abs(power);
      power *= hz;
    }
    const double rel = static_cast<double>(abs(evaluate(a, hz)) / scale);
    cert.max_relative_residual = std::max(cert.max_relative_residual, rel);
  }
  return cert;
}

std::vector<double> bernoulli_decomposition(int n, int d) {
  const auto cert = pf_real_roots(u_sequence(n, d));
  std::vector<double> p;
  for (double z : cert.roots) p.push_back(1.0 / (1.0 - z));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<double> bernoulli_sum_pmf(const std::vector<double>& p) {
  std::vector<double> pmf{1.0};
  for (double q : p) {
    std::vector<double> next(pmf.size() + 1, 0.0);
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      next[k] += pmf[k] * (1 - q);
      next[k + 1] += pmf[k] * q;
    }
    pmf = std::move(next);
  }
  return pmf;
}

double bernoulli_reconstruction_error(int n, int d) {
  const auto pmf = bernoulli_sum_pmf(bernoulli_decomposition(n, d));
  const DiscreteDist u = u_distribution(n, d);
  double worst = 0;
  for (std::size_t k = 0; k < pmf.size(); ++k)
    worst = std::max(worst, std::fabs(pmf[k] - to_double(u.probability(static_cast<std::int64_t>(k)))));
  return worst;
}

MeanBounds u_mean_bounds_check(int n, int d) {
  MeanBounds r;
  r.mean = u_distribution(n, d).mean();
  r.lower_main = (5 - std::sqrt(5.0)) / 10 * n;
  r.upper = n / 2.0;
  r.slack = to_double(r.mean) - r.lower_main;
  r.upper_holds = r.mean * 2 <= n;
  return r;
}

TailCheck pf_tail_check(int n, int d, double r) {
  if (!(r > 0)) throw Error(ErrorKind::InvalidArgument, "tail radius must be positive");
  const DiscreteDist u = u_distribution(n, d);
  TailCheck t;
  const Rational mean = u.mean();
  t.mean = to_double(mean);
  t.tail = 0;
  for (const auto& [k, w] : u.atoms())
    if (Rational(k) <= mean - Rational(r)) t.tail += Rational(w, u.total());
  t.bound = std::exp(-r * r / (2 * t.mean));
  t.holds = to_double(t.tail) <= t.bound;
  return t;
}

VarianceRate u_variance_rate_check(int n_lo, int n_hi) {
  if (n_lo < 2 || n_lo > n_hi) throw Error(ErrorKind::InvalidArgument, "bad n range");
  VarianceRate r;
  const double slope = std::sqrt(5.0) / 25;
  for (int n = n_lo; n <= n_hi; ++n) {
    r.variances.push_back(u_distribution(n, 1).variance());
    r.max_deviation = std::max(r.max_deviation,
                               std::fabs(to_double(r.variances.back()) - slope * n));
  }
  return r;
}

double expected_inverse_sqrt(int n, int d) {
  const DiscreteDist u = u_distribution(n, d);
  HighFloat acc = 0;
  for (const auto& [k, w] : u.atoms()) {
    const HighFloat p = HighFloat(w) / HighFloat(u.total());
    acc += k == 0 ? p : p / sqrt(HighFloat(k));
  }
  return static_cast<double>(acc);
}

}  // namespace corestat
