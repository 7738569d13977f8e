#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corestat/bigint.hpp"
#include "corestat/partition.hpp"

namespace corestat {

/// Image of an n-core with perimeter <= cap * n: x[i-1] counts the beta-set
/// elements congruent to i mod n, for residues i = 1..n-1.
class CoreVector {
 public:
  /// Throws Error(InvalidVector) unless x has n-1 entries in [0, cap].
  CoreVector(int n, int cap, std::vector<int> x);

  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  const std::vector<int>& x() const noexcept { return x_; }

  /// Membership in the strict sub-family: no two adjacent nonzero entries.
  bool is_strict() const noexcept;

  friend bool operator==(const CoreVector&, const CoreVector&) = default;

 private:
  int n_;
  int cap_;
  std::vector<int> x_;
};

/// Image of a self-conjugate n-core with perimeter <= 2 * cap * n: x[i-1]
/// counts diagonal hooks congruent to 2i-1 mod 2n, i = 1..n, and antipodal
/// entries x_i, x_{n+1-i} are never both nonzero.
class DiagVector {
 public:
  DiagVector(int n, int cap, std::vector<int> x);

  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  const std::vector<int>& x() const noexcept { return x_; }

  friend bool operator==(const DiagVector&, const DiagVector&) = default;

 private:
  int n_;
  int cap_;
  std::vector<int> x_;
};

CoreVector encode_core(const Partition& p, int n, int cap);
Partition decode_core(const CoreVector& v);

/// Sum of x == length of the decoded partition.
std::int64_t stat_length(const CoreVector& v);

/// Size of the decoded partition as (V - A^2) / 2 with A = sum x_i and
/// V = sum [n x_i^2 + (2i - n + 1) x_i].
std::int64_t stat_size(const CoreVector& v);

/// Same value via the rational closed form with the pairwise cross term.
Rational stat_size_rational(const CoreVector& v);

DiagVector encode_selfconj(const Partition& p, int n, int cap);
Partition decode_selfconj(const DiagVector& v);

/// The diagonal hook set, expanded class by class from the vector.
std::vector<std::int64_t> diagonal_hooks(const DiagVector& v);

/// Number of diagonal hooks == Durfee length of the decoded partition.
std::int64_t stat_durfee(const DiagVector& v);

/// Sum of h^k over the diagonal hooks. k = 0 is the Durfee length, k = 1 the size.
BigInt stat_power_sum(const DiagVector& v, int k);

/// Text format: "n=4 d=3" header line, then "3,0,1".
std::string format_vector(const std::vector<int>& x);
std::vector<int> parse_vector(const std::string& text);

}  // namespace corestat
