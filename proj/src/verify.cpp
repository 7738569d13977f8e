#include "corestat/verify.hpp"

#include <functional>

#include "corestat/codec.hpp"
#include "corestat/diagnostics.hpp"
#include "corestat/enumerate.hpp"
#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"
#include "corestat/polya.hpp"

namespace corestat {

namespace {

// A check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

std::string core_bijection(int max_n, int max_d) {
  for (int n = 2; n <= max_n; ++n)
    for (int d = 0; d <= max_d; ++d) {
      std::string bad;
      enumerate(FamilySpec(Family::Core, n, d), [&](const std::vector<int>& x) {
        if (!bad.empty()) return;
        const CoreVector v(n, d, x);
        const Partition p = decode_core(v);
        if (!(encode_core(p, n, d) == v) || stat_length(v) != p.length() ||
            stat_size(v) != p.size() || v.is_strict() != is_strict(p) ||
            !is_s_core(p, n) || p.perimeter() > d * n)
          bad = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " x=" + format_vector(x);
      });
      if (!bad.empty()) return bad;
    }
  return {};
}

std::string selfconj_bijection(int max_n, int max_e) {
  for (int n = 2; n <= max_n; ++n)
    for (int e = 0; e <= max_e; ++e) {
      std::string bad;
      enumerate(FamilySpec(Family::SelfConj, n, e), [&](const std::vector<int>& x) {
        if (!bad.empty()) return;
        const DiagVector v(n, e, x);
        const Partition p = decode_selfconj(v);
        if (!(encode_selfconj(p, n, e) == v) || !is_self_conjugate(p) ||
            stat_power_sum(v, 1) != p.size() || stat_durfee(v) != durfee_length(p))
          bad = "n=" + std::to_string(n) + " e=" + std::to_string(e) + " x=" + format_vector(x);
      });
      if (!bad.empty()) return bad;
    }
  return {};
}

std::string oracle_equivalence(int max_n, int max_cap) {
  for (int n = 2; n <= max_n; ++n)
    for (int cap = 0; cap <= max_cap; ++cap)
      for (Family f : {Family::Core, Family::Strict, Family::SelfConj}) {
        std::vector<Statistic> stats{Statistic::length(), Statistic::size()};
        if (f == Family::SelfConj)
          for (int k = 0; k <= 3; ++k) stats.push_back(Statistic::power_sum(k));
        const FamilySpec spec(f, n, cap);
        for (const auto& s : stats) {
          const DiscreteDist dp = distribution(spec, s);
          if (!(dp == oracle_distribution(spec, s)) || dp.total() != count(spec))
            return to_string(f) + " " + to_string(s) + " n=" + std::to_string(n) +
                   " cap=" + std::to_string(cap);
        }
      }
  return {};
}

std::string count_matches_enumeration(int max_n, int max_cap) {
  for (int n = 2; n <= max_n; ++n)
    for (int cap = 0; cap <= max_cap; ++cap)
      for (Family f : {Family::Core, Family::Strict, Family::SelfConj}) {
        const FamilySpec spec(f, n, cap);
        std::uint64_t seen = 0;
        enumerate(spec, [&](const std::vector<int>&) { ++seen; });
        if (count(spec) != seen)
          return to_string(f) + " n=" + std::to_string(n) + " cap=" + std::to_string(cap);
      }
  return {};
}

std::string pf_roots(int max_n) {
  for (int n = 2; n <= max_n; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto cert = pf_real_roots(u_sequence(n, d));
      const std::string where = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      if (!cert.certified()) return where + " not certified";
      for (double z : cert.roots)
        if (!(z <= -1.0 / (4 * d))) return where + " root above -1/(4d)";
      if (bernoulli_reconstruction_error(n, d) > 1e-9) return where + " reconstruction";
    }
  return {};
}

std::string conditional_closed_forms(int max_n, int max_d) {
  for (int n = 3; n <= max_n; ++n)
    for (int d = 1; d <= max_d; ++d)
      for (const auto& stat : {Statistic::length(), Statistic::size()}) {
        const DiscreteDist full = distribution(FamilySpec(Family::Strict, n, d), stat);
        DiscreteDist::Atoms mixed;
        for (const auto& t : nonadjacent_supports(n - 1)) {
          const auto c = conditional_stat(n, d, stat, t);
          if ((c.mean != c.closed_mean || c.variance != c.closed_variance))
            return "closed form n=" + std::to_string(n) + " d=" + std::to_string(d);
          for (const auto& [v, w] : c.dist.atoms()) mixed[v] += w;
        }
        if (!(DiscreteDist(mixed) == full))
          return "mixture n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
  return {};
}

std::string condition_reports(int max_n, int max_d) {
  for (int n = 3; n <= max_n; ++n)
    for (int d = 2; d <= max_d; ++d) {
      const auto r = check_size_form_conditions(n, d);
      // On a two-point support g_i is affine in X, so the ratio is exactly 1.
      const bool cov_ok = d == 2 ? r.max_covariance_ratio == 1 : r.nondegenerate();
      if (!r.arithmetic_progression || !r.root_at_minus_shift || !cov_ok)
        return "n=" + std::to_string(n) + " d=" + std::to_string(d);
    }
  return {};
}

std::string subset_sum_variances(int max_m) {
  for (int m = 0; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k) {
      const DiscreteDist w = subset_sum_dist(m, k);
      if (w.variance() != Rational(BigInt(k) * (m - k) * (m + 1), 12))
        return "m=" + std::to_string(m) + " k=" + std::to_string(k);
    }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(bool quick, std::ostream& log) {
  const int small = quick ? 6 : 8;
  const int caps = quick ? 2 : 3;
  const std::vector<std::pair<std::string, Check>> checks{
      {"core bijection", [&] { return core_bijection(quick ? 6 : 7, caps); }},
      {"self-conjugate bijection", [&] { return selfconj_bijection(quick ? 6 : 7, 2); }},
      {"oracle equivalence", [&] { return oracle_equivalence(small, caps); }},
      {"count matches enumeration", [&] { return count_matches_enumeration(small, caps); }},
      {"PF roots and Bernoulli decomposition", [&] { return pf_roots(quick ? 20 : 40); }},
      {"conditional closed forms and mixture", [&] { return conditional_closed_forms(quick ? 6 : 7, caps); }},
      {"condition reports", [&] { return condition_reports(quick ? 20 : 50, 5); }},
      {"subset-sum variance", [&] { return subset_sum_variances(quick ? 12 : 30); }},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    log << (r.passed ? "PASS " : "FAIL ") << name;
    if (!r.passed) log << ": " << r.detail;
    log << '\n';
    results.push_back(r);
  }
  return results;
}

}  // namespace corestat
