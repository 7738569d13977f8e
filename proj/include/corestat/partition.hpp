#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corestat {

/// An integer partition: non-increasing positive parts, possibly empty.
/// Immutable once built; construct through from_parts/from_beta_set.
class Partition {
 public:
  Partition() = default;

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  std::int64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Largest hook length h_11 = parts[0] + length - 1 (0 for the empty partition).
  int perimeter() const noexcept {
    return parts_.empty() ? 0 : parts_.front() + length() - 1;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  friend Partition from_parts(std::vector<int> parts);
  std::vector<int> parts_;
  std::int64_t size_ = 0;
};

/// Throws Error(InvalidPartition) unless parts is non-increasing and positive.
Partition from_parts(std::vector<int> parts);

/// Hook grid: row i holds parts[i] entries; entry (0,0) is the perimeter.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

/// First-column hook lengths, sorted descending.
std::vector<int> beta_set(const Partition& p);

/// Inverse of beta_set. Accepts any order; rejects duplicates, negatives and
/// sets whose reconstruction yields a non-positive part.
Partition from_beta_set(std::vector<int> beta);

/// No hook length divisible by s, decided on the beta-set: h >= s implies h - s in beta.
bool is_s_core(const Partition& p, int s);

/// Same predicate computed from the full hook grid (reference path).
bool is_s_core_by_hooks(const Partition& p, int s);

Partition conjugate(const Partition& p);
bool is_strict(const Partition& p);
bool is_self_conjugate(const Partition& p);
int durfee_length(const Partition& p);

/// Hooks of the boxes (i,i), 1 <= i <= durfee_length, sorted descending.
std::vector<int> main_diagonal_hooks(const Partition& p);

/// Self-conjugate partition whose main-diagonal hook set is `hooks`.
/// Hooks must be distinct odd positive integers.
Partition from_diagonal_hooks(std::vector<int> hooks);

/// "6,3,2,1" <-> Partition; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// Every partition of `size` (reverse-lexicographic on parts).
std::vector<Partition> partitions_of(int size);

}  // namespace corestat
