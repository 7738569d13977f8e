#include "corestat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "corestat/codec.hpp"
#include "corestat/diagnostics.hpp"
#include "corestat/enumerate.hpp"
#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"
#include "corestat/gaussref.hpp"
#include "corestat/polya.hpp"
#include "corestat/tables.hpp"
#include "corestat/verify.hpp"

namespace corestat {

namespace {

using nlohmann::json;

struct FamilyOptions {
  std::string family = "core";
  std::string stat = "length";
  std::optional<int> d;
  std::optional<int> e;

  void attach(CLI::App* app, bool with_stat = true) {
    app->add_option("--family", family, "core | strict | selfconj")->required();
    if (with_stat) app->add_option("--stat", stat, "length | size | durfee | power:k");
    app->add_option("--d,--cap", d, "per-class capacity for core and strict");
    app->add_option("--e", e, "capacity for selfconj");
  }

  Family parsed_family() const { return parse_family(family); }
  Statistic parsed_stat() const { return parse_statistic(stat); }

  int cap() const {
    const auto& v = parsed_family() == Family::SelfConj ? (e ? e : d) : (d ? d : e);
    if (!v) throw Error(ErrorKind::InvalidArgument, "missing capacity (--d or --e)");
    return *v;
  }
};

std::string rational_json(const Rational& q) { return to_string(q); }

json moment_table_json(const MomentTable& t) {
  json cells = json::array();
  for (const auto& row : t.cells) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c ? json(round_half_away(*c, 3)) : json(nullptr));
    cells.push_back(r);
  }
  return {{"family", to_string(t.family)}, {"stat", to_string(t.stat)}, {"cap", t.cap},
          {"n", t.ns}, {"k", t.ks}, {"cells", cells}};
}

// Lines "key=value" become "--key value" unless the key is already given.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config " + path);
  std::set<std::string> given;
  for (const auto& a : out)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || given.count(key)) continue;
    if (value == "true") {
      out.push_back("--" + key);
    } else if (value != "false") {
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  return out;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      std::size_t ua = 0, ub = 0;
      const int lo = std::stoi(a, &ua), hi = std::stoi(b, &ub);
      if (ua == a.size() && ub == b.size() && lo <= hi) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "bad range '" + text + "' (expected a..b)");
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact statistics of bounded-perimeter core partitions", "corestat"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // moments
  FamilyOptions mo;
  std::string m_n = "5..14", m_k = "3..8", m_format = "csv", m_diff;
  int m_jobs = 1;
  auto* moments_cmd = app.add_subcommand("moments", "standardized-moment table (rows k, columns n)");
  mo.attach(moments_cmd);
  moments_cmd->add_option("--n", m_n, "n range a..b");
  moments_cmd->add_option("--k", m_k, "k range a..b");
  moments_cmd->add_option("--format", m_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  moments_cmd->add_option("--diff", m_diff, "printed table to compare against");
  moments_cmd->add_option("--jobs", m_jobs, "worker threads")->check(CLI::PositiveNumber);
  moments_cmd->callback([&] {
    const auto [n_lo, n_hi] = parse_range(m_n);
    const auto [k_lo, k_hi] = parse_range(m_k);
    const MomentTable t = moments_table(mo.parsed_family(), mo.parsed_stat(), mo.cap(), n_lo,
                                        n_hi, k_lo, k_hi, m_jobs);
    if (m_format == "json")
      out << moment_table_json(t).dump() << '\n';
    else
      out << format_moment_table(t);
    if (!m_diff.empty()) {
      const auto diffs = diff_tables(t, read_printed_table(m_diff));
      for (const auto& d : diffs)
        err << "diff k=" << d.k << " n=" << d.n << " printed=" << d.printed
            << " computed=" << d.computed << '\n';
      if (!diffs.empty()) exit_code = kExitFailure;
    }
  });

  // dist
  FamilyOptions dopt;
  int d_n = 2;
  auto* dist_cmd = app.add_subcommand("dist", "exact pmf as CSV value,weight,total");
  dopt.attach(dist_cmd);
  dist_cmd->add_option("--n", d_n, "modulus")->required();
  dist_cmd->callback([&] {
    const DiscreteDist dist =
        distribution(FamilySpec(dopt.parsed_family(), d_n, dopt.cap()), dopt.parsed_stat());
    out << "value,weight,total\n";
    bool first = true;
    for (const auto& [v, w] : dist.atoms()) {
      out << v << ',' << w << ',';
      if (first) out << dist.total();
      first = false;
      out << '\n';
    }
  });

  // distance
  FamilyOptions nopt;
  std::string n_range = "10..60";
  int n_jobs = 1;
  auto* distance_cmd = app.add_subcommand("distance", "Kolmogorov and Wasserstein distances to N(0,1)");
  nopt.attach(distance_cmd);
  distance_cmd->add_option("--n", n_range, "n range a..b");
  distance_cmd->add_option("--jobs", n_jobs, "worker threads")->check(CLI::PositiveNumber);
  distance_cmd->callback([&] {
    const auto [lo, hi] = parse_range(n_range);
    out << rate_table_csv(rate_table(nopt.parsed_family(), nopt.parsed_stat(), nopt.cap(), lo, hi, n_jobs));
  });

  // sample
  FamilyOptions sopt;
  int s_n = 2;
  std::uint64_t s_seed = 0;
  std::size_t s_count = 1;
  bool s_decode = false;
  auto* sample_cmd = app.add_subcommand("sample", "uniform members as JSON lines");
  sopt.attach(sample_cmd, false);
  sample_cmd->add_option("--n", s_n, "modulus")->required();
  sample_cmd->add_option("--seed", s_seed, "64-bit seed")->required();
  sample_cmd->add_option("--count", s_count, "number of draws");
  sample_cmd->add_flag("--decode", s_decode, "also emit the partition");
  sample_cmd->callback([&] {
    const FamilySpec spec(sopt.parsed_family(), s_n, sopt.cap());
    for (const auto& x : sample(spec, s_seed, s_count)) {
      json line{{"x", x}};
      if (s_decode) {
        const Partition p = spec.family == Family::SelfConj
                                ? decode_selfconj(DiagVector(spec.n, spec.cap, x))
                                : decode_core(CoreVector(spec.n, spec.cap, x));
        line["partition"] = p.parts();
      }
      out << line.dump() << '\n';
    }
  });

  // verify
  bool v_quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->add_flag("--quick", v_quick, "smaller scales");
  verify_cmd->callback([&] {
    const auto results = run_verification(v_quick, out);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    out << (results.size() - failed) << '/' << results.size() << " checks passed\n";
    if (failed) exit_code = kExitFailure;
  });

  // encode / decode
  std::string c_family = "core", c_format = "text", c_partition, c_vector;
  int c_n = 2, c_cap = 0;
  auto* encode_cmd = app.add_subcommand("encode", "partition -> vector");
  encode_cmd->add_option("--family", c_family, "core | selfconj");
  encode_cmd->add_option("--n", c_n, "modulus")->required();
  encode_cmd->add_option("--d,--e,--cap", c_cap, "capacity")->required();
  encode_cmd->add_option("--partition", c_partition, "parts, e.g. 6,3,2,1")->required();
  encode_cmd->add_option("--format", c_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  encode_cmd->callback([&] {
    const Partition p = parse_partition(c_partition);
    const bool selfconj = parse_family(c_family) == Family::SelfConj;
    const std::vector<int> x =
        selfconj ? encode_selfconj(p, c_n, c_cap).x() : encode_core(p, c_n, c_cap).x();
    const std::string cap_key = selfconj ? "e" : "d";
    if (c_format == "json")
      out << json{{"n", c_n}, {cap_key, c_cap}, {"x", x}}.dump() << '\n';
    else
      out << "n=" << c_n << ' ' << cap_key << '=' << c_cap << '\n' << format_vector(x) << '\n';
  });
  auto* decode_cmd = app.add_subcommand("decode", "vector -> partition");
  decode_cmd->add_option("--family", c_family, "core | selfconj");
  decode_cmd->add_option("--n", c_n, "modulus")->required();
  decode_cmd->add_option("--d,--e,--cap", c_cap, "capacity")->required();
  decode_cmd->add_option("--x", c_vector, "vector, e.g. 3,0,1")->required();
  decode_cmd->add_option("--format", c_format, "text | json")->check(CLI::IsMember({"text", "json"}));
  decode_cmd->callback([&] {
    const auto x = parse_vector(c_vector);
    const Partition p = parse_family(c_family) == Family::SelfConj
                            ? decode_selfconj(DiagVector(c_n, c_cap, x))
                            : decode_core(CoreVector(c_n, c_cap, x));
    if (c_format == "json")
      out << json{{"partition", p.parts()}, {"size", p.size()}, {"length", p.length()}}.dump() << '\n';
    else
      out << format_partition(p) << '\n';
  });

  // polya
  int p_n = 2, p_d = 1;
  std::string p_format = "json";
  auto* polya_cmd = app.add_subcommand("polya", "law of U, its roots and Bernoulli decomposition");
  polya_cmd->add_option("--n", p_n, "modulus")->required();
  polya_cmd->add_option("--d", p_d, "capacity")->required();
  polya_cmd->add_option("--format", p_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  polya_cmd->callback([&] {
    const PFSequence seq = u_sequence(p_n, p_d);
    if (p_format == "csv") {
      out << "n,d,k,weight\n";
      for (int k = 0; k <= seq.degree(); ++k)
        out << p_n << ',' << p_d << ',' << k << ',' << seq.coefficients[k] << '\n';
      return;
    }
    json weights = json::array();
    for (const auto& w : seq.coefficients) weights.push_back(w.str());
    const auto cert = pf_real_roots(seq);
    const auto mean = u_mean_bounds_check(p_n, p_d);
    out << json{{"n", p_n}, {"d", p_d}, {"weights", weights}, {"roots", cert.roots},
                {"certified", cert.certified()}, {"bernoulli", bernoulli_decomposition(p_n, p_d)},
                {"mean", rational_json(mean.mean)},
                {"variance", rational_json(u_distribution(p_n, p_d).variance())},
                {"expected_inverse_sqrt", expected_inverse_sqrt(p_n, p_d)}}
               .dump()
        << '\n';
  });

  // diagnose
  auto* diagnose_cmd = app.add_subcommand("diagnose", "numerical hypothesis and tail checks");
  diagnose_cmd->require_subcommand(1);
  int g_n = 3, g_d = 2;
  auto* cond_cmd = diagnose_cmd->add_subcommand("conditions", "condition witnesses for the size form");
  cond_cmd->add_option("--n", g_n, "modulus")->required();
  cond_cmd->add_option("--d", g_d, "capacity")->required();
  cond_cmd->callback([&] {
    const auto r = check_size_form_conditions(g_n, g_d);
    auto opt = [](const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); };
    out << json{{"n", r.n}, {"d", r.d}, {"a", to_string(r.a)},
                {"arithmetic_progression", r.arithmetic_progression},
                {"root_at_minus_shift", r.root_at_minus_shift},
                {"inf_var_g", to_string(r.inf_var_g)}, {"sup_g_squared", to_string(r.sup_g_squared)},
                {"near_independence_ratio", opt(r.near_independence_ratio)},
                {"boundedness_ratio", opt(r.boundedness_ratio)},
                {"max_covariance_ratio", to_string(r.max_covariance_ratio)},
                {"nondegenerate", r.nondegenerate()}}
               .dump()
        << '\n';
  });
  FamilyOptions topt;
  int t_n = 2;
  std::vector<double> t_multiples{1, 2, 3, 4};
  auto* tail_cmd = diagnose_cmd->add_subcommand("tail", "exact tails and the witnessed constant");
  topt.attach(tail_cmd);
  tail_cmd->add_option("--n", t_n, "modulus")->required();
  tail_cmd->add_option("--sigmas", t_multiples, "radii in units of sigma")->delimiter(',');
  tail_cmd->callback([&] {
    const auto r = concentration_check(FamilySpec(topt.parsed_family(), t_n, topt.cap()),
                                       topt.parsed_stat(), t_multiples);
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back({{"sigma_multiple", p.sigma_multiple}, {"radius", p.radius},
                     {"probability", to_string(p.probability)},
                     {"witness", std::isfinite(p.witness) ? json(p.witness) : json(nullptr)}});
    out << json{{"family", to_string(r.spec.family)}, {"stat", to_string(r.stat)},
                {"n", r.spec.n}, {"cap", r.spec.cap}, {"scale", r.scale}, {"sigma", r.sigma},
                {"points", pts},
                {"constant", std::isfinite(r.constant) ? json(r.constant) : json(nullptr)}}
               .dump()
        << '\n';
  });
  int h_m = 1, h_k = 0;
  auto* hoeff_cmd = diagnose_cmd->add_subcommand("hoeffding", "sum of a uniform k-subset of [m]");
  hoeff_cmd->add_option("--m", h_m, "ground set size")->required();
  hoeff_cmd->add_option("--k", h_k, "subset size")->required();
  hoeff_cmd->callback([&] {
    const auto r = hoeffding_cclt_dist(h_m, h_k);
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    out << json{{"m", r.m}, {"k", r.k}, {"variance", to_string(r.variance)},
                {"formula_variance", to_string(r.formula_variance)},
                {"d_K", opt(r.d_K)}, {"d_W", opt(r.d_W)},
                {"scaled_dK", opt(r.scaled_dK)}, {"scaled_dW", opt(r.scaled_dW)}}
               .dump()
        << '\n';
  });

  try {
    std::vector<std::string> args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return exit_code;
}

}  // namespace corestat
