#include "corestat/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "corestat/error.hpp"
#include "corestat/exactdist.hpp"

namespace corestat {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw Error(ErrorKind::InvalidArgument, "expected an integer, got '" + s + "'");
  return v;
}

std::string format_cell(const std::optional<double>& v) {
  if (!v) return "nan";
  double r = round_half_away(*v, 3);
  if (r == 0) r = 0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r);
  return buf;
}

}  // namespace

MomentTable moments_table(Family family, const Statistic& stat, int cap, int n_lo,
                          int n_hi, int k_lo, int k_hi, int jobs) {
  if (n_lo > n_hi || k_lo > k_hi || k_lo < 0)
    throw Error(ErrorKind::InvalidArgument, "empty n or k range");
  require_supported(family, stat);
  MomentTable t;
  t.family = family;
  t.stat = stat;
  t.cap = cap;
  for (int n = n_lo; n <= n_hi; ++n) t.ns.push_back(n);
  for (int k = k_lo; k <= k_hi; ++k) t.ks.push_back(k);
  t.cells.assign(t.ks.size(), std::vector<std::optional<double>>(t.ns.size()));

  auto column = [&](int n) { return moments(FamilySpec(family, n, cap), stat, k_hi); };
  const int workers = std::max(1, jobs);
  for (std::size_t start = 0; start < t.ns.size(); start += workers) {
    std::vector<std::future<MomentReport>> batch;
    for (std::size_t c = start; c < std::min(t.ns.size(), start + workers); ++c)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 column, t.ns[c]));
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const MomentReport report = batch[i].get();
      for (std::size_t r = 0; r < t.ks.size(); ++r)
        t.cells[r][start + i] = report.standardized_moment(t.ks[r]);
    }
  }
  return t;
}

std::string format_moment_table(const MomentTable& table) {
  std::ostringstream out;
  out << 'k';
  for (int n : table.ns) out << ',' << n;
  out << '\n';
  for (std::size_t r = 0; r < table.ks.size(); ++r) {
    out << table.ks[r];
    for (const auto& cell : table.cells[r]) out << ',' << format_cell(cell);
    out << '\n';
  }
  return out.str();
}

PrintedTable parse_printed_table(const std::string& csv) {
  std::stringstream ss(csv);
  std::string line;
  PrintedTable t;
  bool header = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (header) {
      if (cells.empty() || cells[0] != "k")
        throw Error(ErrorKind::InvalidArgument, "table header must start with 'k'");
      for (std::size_t i = 1; i < cells.size(); ++i) t.ns.push_back(to_int(cells[i]));
      header = false;
      continue;
    }
    if (cells.size() != t.ns.size() + 1)
      throw Error(ErrorKind::InvalidArgument, "ragged table row: " + line);
    t.ks.push_back(to_int(cells[0]));
    t.cells.emplace_back(cells.begin() + 1, cells.end());
  }
  if (header) throw Error(ErrorKind::InvalidArgument, "empty table");
  return t;
}

PrintedTable read_printed_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_printed_table(buf.str());
}

std::vector<CellDiff> diff_tables(const MomentTable& computed, const PrintedTable& printed,
                                  double tolerance) {
  std::vector<CellDiff> diffs;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < printed.ks.size(); ++r) {
    for (std::size_t c = 0; c < printed.ns.size(); ++c) {
      CellDiff d{printed.ks[r], printed.ns[c], printed.cells[r][c], 0, inf};
      const auto kr = std::find(computed.ks.begin(), computed.ks.end(), d.k);
      const auto nc = std::find(computed.ns.begin(), computed.ns.end(), d.n);
      if (kr != computed.ks.end() && nc != computed.ns.end()) {
        const auto& cell = computed.cells[kr - computed.ks.begin()][nc - computed.ns.begin()];
        char* end = nullptr;
        const double printed_value = std::strtod(d.printed.c_str(), &end);
        const bool numeric = !d.printed.empty() && *end == '\0';
        if (cell && numeric) {
          d.computed = round_half_away(*cell, 3);
          d.delta = std::fabs(d.computed - printed_value);
        }
      }
      // 1e-9 absorbs binary representation of the decimal cells.
      if (!(d.delta <= tolerance + 1e-9)) diffs.push_back(d);
    }
  }
  return diffs;
}

}  // namespace corestat
