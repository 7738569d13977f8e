#pragma once

#include <vector>

#include "corestat/bigint.hpp"
#include "corestat/discrete_dist.hpp"

namespace corestat {

/// Non-negative coefficients a_0..a_m of a generating polynomial.
struct PFSequence {
  std::vector<BigInt> coefficients;

  /// Throws Error(InvalidArgument) on a negative entry or a zero total.
  explicit PFSequence(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt total() const;
};

/// Weights C(n-k, k) d^k for k = 0..floor(n/2), constant term included.
PFSequence u_sequence(int n, int d);

/// Law of the number of nonzero coordinates of a uniform strict vector.
DiscreteDist u_distribution(int n, int d);

struct RootCertificate {
  std::vector<double> roots;         ///< ascending
  std::vector<double> brackets;      ///< left ends of grid cells holding a sign change
  int sign_change_roots = 0;
  int degree = 0;
  double max_relative_residual = 0;  ///< |p(z)| / sum |a_k z^k|

  bool certified() const { return degree > 0 && sign_change_roots == degree; }
};

/// Isolates every root as an exact sign change of p on a geometric grid over
/// (-cauchy_bound, 0), then bisects to 1e-12 relative width. Signs are exact:
/// long double Horner with a rounding bound, rational re-evaluation inside it.
/// Throws Error(NonRealRoot) when fewer than `degree` sign changes exist and
/// Error(InvalidArgument) when the degree is zero.
RootCertificate pf_real_roots(const PFSequence& seq);

/// p_i = 1 / (1 - z_i) over the roots of the U polynomial, ascending.
std::vector<double> bernoulli_decomposition(int n, int d);

/// pmf of a sum of independent Bernoulli(p_i).
std::vector<double> bernoulli_sum_pmf(const std::vector<double>& p);

/// max_k |P(sum of Bernoullis = k) - P(U = k)|.
double bernoulli_reconstruction_error(int n, int d);

struct MeanBounds {
  Rational mean;
  double lower_main = 0;  ///< (5 - sqrt 5) / 10 * n
  double upper = 0;       ///< n / 2
  double slack = 0;       ///< E[U] - lower_main
  bool upper_holds = false;
};

MeanBounds u_mean_bounds_check(int n, int d);

struct TailCheck {
  Rational tail;      ///< P(U <= E[U] - r)
  double mean = 0;
  double bound = 0;   ///< exp(-r^2 / (2 E[U]))
  bool holds = false;
};

/// Throws Error(InvalidArgument) unless r > 0.
TailCheck pf_tail_check(int n, int d, double r);

struct VarianceRate {
  std::vector<Rational> variances;  ///< index n - n_lo
  double max_deviation = 0;         ///< max |Var U - sqrt(5) n / 25|
};

/// d = 1 only.
VarianceRate u_variance_rate_check(int n_lo, int n_hi);

/// E[min{1 / sqrt U, 1}].
double expected_inverse_sqrt(int n, int d);

}  // namespace corestat
