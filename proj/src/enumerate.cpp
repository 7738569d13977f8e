#include "corestat/enumerate.hpp"

#include <limits>

#include "corestat/codec.hpp"
#include "corestat/error.hpp"
#include "corestat/rng.hpp"

namespace corestat {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t r = next() & mask;
    if (r < bound) return r;
  }
}

BigInt SplitMix64::below(const BigInt& bound) {
  if (bound <= 0) throw Error(ErrorKind::InvalidArgument, "bound must be positive");
  if (bound <= std::numeric_limits<std::uint64_t>::max())
    return BigInt(below(static_cast<std::uint64_t>(bound)));
  const std::size_t bits = msb(bound - 1) + 1;
  const std::size_t words = (bits + 63) / 64;
  const BigInt modulus = BigInt(1) << bits;
  for (;;) {
    BigInt r = 0;
    for (std::size_t w = 0; w < words; ++w) r = (r << 64) | BigInt(next());
    r %= modulus;
    if (r < bound) return r;
  }
}

BigInt count(const FamilySpec& spec) {
  const int n = spec.n;
  const BigInt cap = spec.cap;
  switch (spec.family) {
    case Family::Core:
      return pow(cap + 1, static_cast<unsigned>(n - 1));
    case Family::Strict: {
      BigInt total = 0;
      for (int k = 0; k <= n / 2; ++k)
        total += binomial(n - k, k) * pow(cap, static_cast<unsigned>(k));
      return total;
    }
    case Family::SelfConj:
      return pow(2 * cap + 1, static_cast<unsigned>(n / 2));
  }
  return 0;
}

bool is_member(const FamilySpec& spec, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != spec.dimension()) return false;
  for (int v : x)
    if (v < 0 || v > spec.cap) return false;
  if (spec.family == Family::Strict) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] != 0 && x[i + 1] != 0) return false;
  } else if (spec.family == Family::SelfConj) {
    const int n = spec.n;
    for (int i = 0; i < n; ++i)
      if (x[i] != 0 && x[n - 1 - i] != 0) return false;
  }
  return true;
}

namespace {

// Largest admissible value at `pos` given the already-fixed prefix.
int max_value_at(const FamilySpec& spec, const std::vector<int>& x, int pos) {
  switch (spec.family) {
    case Family::Core:
      return spec.cap;
    case Family::Strict:
      return (pos > 0 && x[pos - 1] != 0) ? 0 : spec.cap;
    case Family::SelfConj: {
      const int partner = spec.n - 1 - pos;
      if (partner == pos) return 0;
      if (partner < pos && x[partner] != 0) return 0;
      return spec.cap;
    }
  }
  return 0;
}

void check_limit(const FamilySpec& spec, std::uint64_t limit) {
  if (count(spec) > limit)
    throw Error(ErrorKind::CardinalityLimit,
                "family has " + count(spec).str() + " members, above limit " +
                    std::to_string(limit));
}

}  // namespace

void enumerate(const FamilySpec& spec,
               const std::function<void(const std::vector<int>&)>& visit,
               std::uint64_t limit) {
  check_limit(spec, limit);
  const int dim = spec.dimension();
  std::vector<int> x(dim, 0);
  if (dim == 0) {
    visit(x);
    return;
  }
  // Odometer over the prefix tree; position `pos` holds the value being tried.
  int pos = 0;
  x[0] = 0;
  for (;;) {
    if (pos == dim - 1) {
      visit(x);
      // Advance the deepest position, backtracking as needed.
      while (pos >= 0 && x[pos] >= max_value_at(spec, x, pos)) {
        x[pos] = 0;
        --pos;
      }
      if (pos < 0) return;
      ++x[pos];
    } else {
      ++pos;
      x[pos] = 0;
    }
  }
}

std::vector<std::vector<int>> enumerate_all(const FamilySpec& spec,
                                            std::uint64_t limit) {
  std::vector<std::vector<int>> out;
  enumerate(spec, [&](const std::vector<int>& x) { out.push_back(x); }, limit);
  return out;
}

std::vector<std::vector<int>> sample(const FamilySpec& spec, std::uint64_t seed,
                                     std::size_t draws) {
  SplitMix64 rng(seed);
  const int n = spec.n;
  const int cap = spec.cap;
  std::vector<std::vector<int>> out;
  out.reserve(draws);

  // Strict: free[i] = completions of positions i.. when position i is unconstrained.
  std::vector<BigInt> free;
  if (spec.family == Family::Strict) {
    const int m = n - 1;
    free.assign(m + 2, BigInt(1));
    for (int i = m - 1; i >= 0; --i) free[i] = free[i + 1] + cap * free[i + 2];
  }

  for (std::size_t draw = 0; draw < draws; ++draw) {
    std::vector<int> x(spec.dimension(), 0);
    switch (spec.family) {
      case Family::Core:
        for (auto& v : x) v = static_cast<int>(rng.below(std::uint64_t(cap) + 1));
        break;
      case Family::Strict: {
        const int m = n - 1;
        int i = 0;
        while (i < m) {
          const BigInt r = rng.below(free[i]);
          if (r < free[i + 1]) {
            ++i;
          } else {
            const BigInt rest = r - free[i + 1];
            x[i] = 1 + static_cast<int>(rest / free[i + 2]);
            i += 2;  // the next position is forced to zero
          }
        }
        break;
      }
      case Family::SelfConj:
        for (int i = 0; i < n - 1 - i; ++i) {
          const auto r = static_cast<int>(rng.below(2 * std::uint64_t(cap) + 1));
          if (r == 0) continue;
          if (r <= cap)
            x[i] = r;
          else
            x[n - 1 - i] = r - cap;
        }
        break;
    }
    out.push_back(std::move(x));
  }
  return out;
}

DiscreteDist oracle_distribution(const FamilySpec& spec, const Statistic& stat,
                                 std::uint64_t limit) {
  require_supported(spec.family, stat);
  DiscreteDist::Atoms atoms;
  auto add = [&](const BigInt& value) {
    if (value > std::numeric_limits<std::int64_t>::max())
      throw Error(ErrorKind::InvalidArgument, "statistic value overflows int64");
    ++atoms[static_cast<std::int64_t>(value)];
  };
  enumerate(
      spec,
      [&](const std::vector<int>& x) {
        if (spec.family == Family::SelfConj) {
          const Partition p = decode_selfconj(DiagVector(spec.n, spec.cap, x));
          switch (stat.kind) {
            case Statistic::Kind::Length:
            case Statistic::Kind::Durfee:
              add(durfee_length(p));
              break;
            case Statistic::Kind::Size:
              add(p.size());
              break;
            case Statistic::Kind::PowerSum: {
              BigInt s = 0;
              for (int h : main_diagonal_hooks(p))
                s += pow(BigInt(h), static_cast<unsigned>(stat.power));
              add(s);
              break;
            }
          }
        } else {
          const Partition p = decode_core(CoreVector(spec.n, spec.cap, x));
          add(stat.kind == Statistic::Kind::Length ? BigInt(p.length())
                                                   : BigInt(p.size()));
        }
      },
      limit);
  return DiscreteDist(std::move(atoms));
}

}  // namespace corestat
