#pragma once

#include <string>
#include <string_view>

namespace corestat {

enum class Family {
  Core,      ///< B_n: {0..d}^{n-1}
  Strict,    ///< SB_n: B_n without adjacent nonzero entries
  SelfConj,  ///< MD_n: {0..e}^n with x_i * x_{n+1-i} == 0
};

/// One family at modulus n and capacity cap (d for Core/Strict, e for SelfConj).
struct FamilySpec {
  Family family = Family::Core;
  int n = 2;
  int cap = 0;

  FamilySpec() = default;
  /// Throws Error(InvalidArgument) when n < 2 or cap < 0.
  FamilySpec(Family f, int n_, int cap_);

  /// Length of the vectors in the family.
  int dimension() const noexcept { return family == Family::SelfConj ? n : n - 1; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Statistic identifiers: length | size | durfee | power:k.
/// On SelfConj, `length` and `durfee` both mean the Durfee length and
/// `size` equals power:1. Core and Strict support only length and size.
struct Statistic {
  enum class Kind { Length, Size, Durfee, PowerSum };
  Kind kind = Kind::Length;
  int power = 0;

  static Statistic length() { return {Kind::Length, 0}; }
  static Statistic size() { return {Kind::Size, 0}; }
  static Statistic durfee() { return {Kind::Durfee, 0}; }
  static Statistic power_sum(int k) { return {Kind::PowerSum, k}; }

  friend bool operator==(const Statistic&, const Statistic&) = default;
};

Family parse_family(std::string_view text);
std::string to_string(Family f);
Statistic parse_statistic(std::string_view text);
std::string to_string(const Statistic& s);

/// Throws Error(UnsupportedStatistic) when stat is not defined on family.
void require_supported(Family family, const Statistic& stat);

}  // namespace corestat
