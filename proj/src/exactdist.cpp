#include "corestat/exactdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "corestat/error.hpp"

namespace corestat {

namespace {

constexpr int kABits = 21;

std::uint64_t pack(std::uint64_t flag, std::uint64_t a, std::uint64_t v) {
  return (v << (kABits + 1)) | (a << 1) | flag;
}

std::vector<std::vector<int>> full_range(int positions, int cap) {
  std::vector<int> values(cap + 1);
  for (int v = 0; v <= cap; ++v) values[v] = v;
  return std::vector<std::vector<int>>(positions, values);
}

// DP over (last-nonzero, running sum) for the length statistic.
DiscreteDist length_dp(const std::vector<std::vector<int>>& allowed,
                       bool no_adjacent) {
  using Layer = std::map<std::pair<int, std::int64_t>, BigInt>;
  Layer layer{{{0, 0}, BigInt(1)}};
  for (const auto& values : allowed) {
    Layer next;
    for (const auto& [key, w] : layer) {
      const auto [flag, a] = key;
      for (int x : values) {
        if (no_adjacent && flag && x != 0) continue;
        next[{x != 0 ? 1 : 0, a + x}] += w;
      }
    }
    layer = std::move(next);
  }
  DiscreteDist::Atoms atoms;
  for (const auto& [key, w] : layer) atoms[key.second] += w;
  return DiscreteDist(std::move(atoms));
}

// One antipodal pair (i, n+1-i) of a diagonal vector: the 2e+1 legal
// assignments, each mapped through the per-coordinate contribution.
template <typename Contribution>
DiscreteDist selfconj_pair_product(int n, int e, Contribution contribution) {
  DiscreteDist result = DiscreteDist::point_mass(0);
  for (int i = 1; i < n + 1 - i; ++i) {
    const int j = n + 1 - i;
    DiscreteDist::Atoms pair{{0, BigInt(1)}};
    for (int v = 1; v <= e; ++v) {
      ++pair[contribution(i, v)];
      ++pair[contribution(j, v)];
    }
    result = convolve(result, DiscreteDist(std::move(pair)));
  }
  return result;
}

void check_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::InvalidArgument, "statistic value overflows int64");
}

}  // namespace

DiscreteDist size_dp(int n, const std::vector<std::vector<int>>& allowed,
                     bool no_adjacent) {
  if (static_cast<int>(allowed.size()) != n - 1)
    throw Error(ErrorKind::InvalidArgument, "size_dp needs n-1 value sets");
  using Layer = std::unordered_map<std::uint64_t, BigInt>;
  Layer layer;
  layer.emplace(pack(0, 0, 0), BigInt(1));
  const std::int64_t nn = n;
  for (std::int64_t i = 1; i < nn; ++i) {
    Layer next;
    next.reserve(layer.size() * 2);
    const auto& values = allowed[i - 1];
    for (const auto& [key, w] : layer) {
      const std::uint64_t flag = key & 1;
      const std::uint64_t a = (key >> 1) & ((1u << kABits) - 1);
      const std::uint64_t v = key >> (kABits + 1);
      for (int x : values) {
        if (no_adjacent && flag && x != 0) continue;
        const std::int64_t dx = x;
        // n x^2 + (2i - n + 1) x = x (n (x - 1) + 2i + 1) >= 0
        const std::int64_t dv = dx * (nn * (dx - 1) + 2 * i + 1);
        next[pack(x != 0, a + x, v + dv)] += w;
      }
    }
    layer = std::move(next);
  }
  DiscreteDist::Atoms atoms;
  for (const auto& [key, w] : layer) {
    const auto a = static_cast<std::int64_t>((key >> 1) & ((1u << kABits) - 1));
    const auto v = static_cast<std::int64_t>(key >> (kABits + 1));
    const std::int64_t twice = v - a * a;
    if (twice % 2 != 0)
      throw Error(ErrorKind::InvalidArgument, "odd V - A^2 at a DP terminal state");
    atoms[twice / 2] += w;
  }
  return DiscreteDist(std::move(atoms));
}

DiscreteDist dist_length(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Core: {
      DiscreteDist result = DiscreteDist::point_mass(0);
      const DiscreteDist one = DiscreteDist::uniform(0, spec.cap);
      for (int i = 1; i < spec.n; ++i) result = convolve(result, one);
      return result;
    }
    case Family::Strict:
      return length_dp(full_range(spec.n - 1, spec.cap), true);
    case Family::SelfConj:
      return selfconj_pair_product(spec.n, spec.cap,
                                   [](int, int v) { return std::int64_t{v}; });
  }
  return DiscreteDist::point_mass(0);
}

DiscreteDist dist_size(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Core:
      return size_dp(spec.n, full_range(spec.n - 1, spec.cap), false);
    case Family::Strict:
      return size_dp(spec.n, full_range(spec.n - 1, spec.cap), true);
    case Family::SelfConj: {
      const std::int64_t n = spec.n;
      return selfconj_pair_product(spec.n, spec.cap, [n](int i, int v) {
        const std::int64_t x = v;
        return n * x * x + (2 * std::int64_t{i} - n - 1) * x;
      });
    }
  }
  return DiscreteDist::point_mass(0);
}

DiscreteDist dist_power_sum_selfconj(int n, int e, int k) {
  const FamilySpec spec(Family::SelfConj, n, e);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "power k must be >= 0");
  return selfconj_pair_product(n, e, [n, k](int i, int v) {
    BigInt s = 0;
    for (int t = 0; t < v; ++t)
      s += pow(BigInt(2 * i - 1 + 2 * n * t), static_cast<unsigned>(k));
    check_int64(s);
    return static_cast<std::int64_t>(s);
  });
}

DiscreteDist distribution(const FamilySpec& spec, const Statistic& stat) {
  require_supported(spec.family, stat);
  switch (stat.kind) {
    case Statistic::Kind::Length:
    case Statistic::Kind::Durfee:
      return dist_length(spec);
    case Statistic::Kind::Size:
      return dist_size(spec);
    case Statistic::Kind::PowerSum:
      return dist_power_sum_selfconj(spec.n, spec.cap, stat.power);
  }
  return DiscreteDist::point_mass(0);
}

MomentReport moments(const DiscreteDist& dist, int k_max) {
  if (k_max < 0) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 0");
  const BigInt& total = dist.total();
  BigInt p1 = 0;
  for (const auto& [v, w] : dist.atoms()) p1 += w * v;

  // nk[k] = sum w (T v - P1)^k, so the k-th central moment is nk[k] / T^(k+1).
  const int kk = std::max(k_max, 2);
  std::vector<BigInt> nk(kk + 1, BigInt(0));
  for (const auto& [v, w] : dist.atoms()) {
    const BigInt dev = total * v - p1;
    BigInt term = w;
    for (int k = 0; k <= kk; ++k) {
      nk[k] += term;
      term *= dev;
    }
  }

  MomentReport report;
  report.mean = Rational(p1, total);
  report.variance = Rational(nk[2], pow(total, 3));
  report.central.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    report.central[k] = Rational(nk[k], pow(total, static_cast<unsigned>(k + 1)));

  if (nk[2] != 0) {
    report.standardized.resize(k_max + 1);
    const HighFloat t(total);
    const HighFloat n2(nk[2]);
    for (int k = 0; k <= k_max; ++k) {
      // m_k = N_k T^(k/2 - 1) / N_2^(k/2)
      const HighFloat half_k = HighFloat(k) / 2;
      const HighFloat value =
          HighFloat(nk[k]) * boost::multiprecision::pow(t, half_k - 1) /
          boost::multiprecision::pow(n2, half_k);
      report.standardized[k] = static_cast<double>(value);
    }
  }
  return report;
}

MomentReport moments(const FamilySpec& spec, const Statistic& stat, int k_max) {
  MomentReport report = moments(distribution(spec, stat), k_max);
  report.spec = spec;
  report.stat = stat;
  return report;
}

double round_half_away(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(value * scale) / scale;
}

std::vector<int> tau_shift(std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  for (std::size_t i = 0; i < subset.size(); ++i) subset[i] += static_cast<int>(i);
  return subset;
}

std::vector<std::vector<int>> nonadjacent_supports(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(current);
    for (int i = next; i <= m; ++i) {
      current.push_back(i);
      self(self, i + 2);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Rational CenteredForm::g(int i, const Rational& x) const {
  const Rational y = x + shift();
  return quad * y * y + linear[i] * y;
}

CenteredForm centered_form(int n, int d, const Statistic& stat) {
  CenteredForm form;
  form.n = n;
  form.d = d;
  form.linear.assign(n, Rational(0));
  const Rational c(d + 1, 2);
  switch (stat.kind) {
    case Statistic::Kind::Length:
      form.a = 0;
      form.quad = 0;
      for (int i = 1; i < n; ++i) form.linear[i] = 1;
      break;
    case Statistic::Kind::Size:
      form.a = -1;
      form.quad = Rational(n - 1, 2);
      for (int i = 1; i < n; ++i)
        form.linear[i] = Rational(i) - Rational(n - 1, 2) - Rational(n - 2) * c;
      break;
    default:
      throw Error(ErrorKind::UnsupportedStatistic,
                  "centered form exists only for length and size");
  }
  return form;
}

std::vector<Rational> centered_support(int d) {
  std::vector<Rational> s;
  for (int j = 1; j <= d; ++j) s.emplace_back(2 * j - d - 1, 2);
  return s;
}

ConditionalStat conditional_stat(int n, int d, const Statistic& stat,
                                 const std::vector<int>& support) {
  const FamilySpec spec(Family::Strict, n, d);
  if (stat.kind != Statistic::Kind::Length && stat.kind != Statistic::Kind::Size)
    throw Error(ErrorKind::UnsupportedStatistic,
                "conditional statistics exist only for length and size");
  std::vector<int> t = support;
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > n - 1)
      throw Error(ErrorKind::InvalidArgument, "support index outside [1, n-1]");
    if (i > 0 && t[i] - t[i - 1] <= 1)
      throw Error(ErrorKind::AdjacentSupport,
                  "support contains equal or adjacent indices");
  }
  if (!t.empty() && d < 1)
    throw Error(ErrorKind::InvalidArgument, "non-empty support needs d >= 1");

  std::vector<std::vector<int>> allowed(n - 1, std::vector<int>{0});
  for (int i : t) {
    allowed[i - 1].clear();
    for (int v = 1; v <= d; ++v) allowed[i - 1].push_back(v);
  }

  ConditionalStat out{stat.kind == Statistic::Kind::Length ? length_dp(allowed, true)
                                                          : size_dp(n, allowed, true),
                      0, 0, 0, 0};
  out.mean = out.dist.mean();
  out.variance = out.dist.variance();

  // Closed forms over X uniform on the centered support.
  const CenteredForm form = centered_form(n, d, stat);
  const Rational c = form.shift();
  const auto xs = centered_support(d);
  const Rational inv(1, std::max(d, 1));
  Rational var_x = 0;
  for (const auto& x : xs) var_x += x * x * inv;

  const auto k = static_cast<std::int64_t>(t.size());
  const Rational pairs_all = Rational(binomial(n - 1, 2));
  const Rational pairs_out = Rational(binomial(n - 1 - k, 2));
  Rational mean = form.a * pairs_out * c * c - form.a * pairs_all * c * c;
  Rational var = 0;
  for (int i : t) {
    Rational eg = 0, eg2 = 0, egx = 0;
    for (const auto& x : xs) {
      const Rational g = form.g(i, x);
      eg += g * inv;
      eg2 += g * g * inv;
      egx += g * x * inv;
    }
    const Rational var_g = eg2 - eg * eg;
    const Rational cov_gx = egx;  // E[X] == 0
    mean += eg;
    var += var_g - form.a * Rational(n - 1 - k) * Rational(d + 1) * cov_gx;
  }
  var += form.a * form.a * Rational(k) * Rational((n - 1 - k) * (n - 1 - k)) * c * c * var_x;
  var += form.a * form.a * Rational(binomial(k, 2)) * var_x * var_x;
  out.closed_mean = mean;
  out.closed_variance = var;
  return out;
}

}  // namespace corestat
