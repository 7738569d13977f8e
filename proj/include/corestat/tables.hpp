#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corestat/family.hpp"

namespace corestat {

/// Standardized moments laid out with rows k and columns n.
struct MomentTable {
  Family family = Family::Core;
  Statistic stat;
  int cap = 0;
  std::vector<int> ns;
  std::vector<int> ks;
  /// cells[row][col] = m_k at n, unrounded; nullopt when the variance is 0.
  std::vector<std::vector<std::optional<double>>> cells;
};

/// Cells are computed in parallel across n with up to `jobs` workers.
MomentTable moments_table(Family family, const Statistic& stat, int cap, int n_lo,
                          int n_hi, int k_lo, int k_hi, int jobs = 1);

/// Header "k,n1,n2,...", then one row per k with 3-decimal cells rounded
/// half away from zero; undefined cells print as "nan".
std::string format_moment_table(const MomentTable& table);

/// A printed table: header of n values, rows keyed by k, cells as text.
struct PrintedTable {
  std::vector<int> ns;
  std::vector<int> ks;
  std::vector<std::vector<std::string>> cells;
};

/// Throws Error(InvalidArgument) on malformed input.
PrintedTable parse_printed_table(const std::string& csv);
PrintedTable read_printed_table(const std::string& path);

struct CellDiff {
  int k = 0;
  int n = 0;
  std::string printed;
  double computed = 0;  ///< rounded to 3 decimals
  double delta = 0;
};

/// Cells whose rounded value differs from the printed one by more than
/// `tolerance`, plus cells missing from either side (delta = inf).
std::vector<CellDiff> diff_tables(const MomentTable& computed, const PrintedTable& printed,
                                  double tolerance = 0.001);

}  // namespace corestat
