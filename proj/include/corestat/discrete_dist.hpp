#pragma once

#include <cstdint>
#include <map>

#include "corestat/bigint.hpp"

namespace corestat {

/// Exact integer-valued distribution: support value -> positive weight.
/// Probabilities are weight / total. Immutable after construction.
class DiscreteDist {
 public:
  using Atoms = std::map<std::int64_t, BigInt>;

  DiscreteDist() : atoms_{{0, BigInt(1)}}, total_(1) {}

  /// Zero weights are dropped; throws Error(InvalidArgument) on a negative
  /// weight or an empty (all-zero) input.
  explicit DiscreteDist(Atoms atoms);

  static DiscreteDist point_mass(std::int64_t value);
  /// Uniform on {lo, ..., hi}.
  static DiscreteDist uniform(std::int64_t lo, std::int64_t hi);

  const Atoms& atoms() const noexcept { return atoms_; }
  const BigInt& total() const noexcept { return total_; }
  std::size_t support_size() const noexcept { return atoms_.size(); }

  /// Weight of `value` (0 when outside the support).
  BigInt weight(std::int64_t value) const;
  Rational probability(std::int64_t value) const;

  Rational mean() const;
  Rational variance() const;

  /// Distribution of scale * X + shift.
  DiscreteDist affine(std::int64_t scale, std::int64_t shift) const;

  friend bool operator==(const DiscreteDist&, const DiscreteDist&) = default;

 private:
  Atoms atoms_;
  BigInt total_;
};

/// Law of the sum of independent draws from a and b; totals multiply.
DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b);

}  // namespace corestat
