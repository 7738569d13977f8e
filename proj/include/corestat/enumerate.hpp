#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "corestat/bigint.hpp"
#include "corestat/discrete_dist.hpp"
#include "corestat/family.hpp"

namespace corestat {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;

/// Exact cardinality: (d+1)^(n-1) for Core, sum_k C(n-k,k) d^k for Strict,
/// (2e+1)^(number of antipodal pairs) for SelfConj.
BigInt count(const FamilySpec& spec);

/// Membership predicate for raw vectors (length, range and family constraint).
bool is_member(const FamilySpec& spec, const std::vector<int>& x);

/// Visits every member in lexicographic order. Throws
/// Error(CardinalityLimit) before visiting anything if count(spec) > limit.
void enumerate(const FamilySpec& spec,
               const std::function<void(const std::vector<int>&)>& visit,
               std::uint64_t limit = kDefaultEnumerationLimit);

std::vector<std::vector<int>> enumerate_all(
    const FamilySpec& spec, std::uint64_t limit = kDefaultEnumerationLimit);

/// `draws` independent uniform members, a pure function of (spec, seed, draws).
std::vector<std::vector<int>> sample(const FamilySpec& spec, std::uint64_t seed,
                                     std::size_t draws);

/// Brute-force law of `stat`: each member is decoded to its partition and the
/// statistic is measured on the partition itself (length, size, Durfee
/// length, diagonal-hook power sums).
DiscreteDist oracle_distribution(const FamilySpec& spec, const Statistic& stat,
                                 std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace corestat
