#include "corestat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "corestat/error.hpp"

namespace corestat {

namespace {

// Column heights: cols[j] = #{r : parts[r] > j}.
std::vector<int> column_heights(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p.parts().front(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return cols;
}

}  // namespace

Partition from_parts(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw Error(ErrorKind::InvalidPartition,
                  "partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw Error(ErrorKind::InvalidPartition,
                  "partition parts must be non-increasing");
  }
  Partition p;
  p.size_ = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  p.parts_ = std::move(parts);
  return p;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  const auto cols = column_heights(p);
  std::vector<std::vector<int>> grid;
  grid.reserve(p.parts().size());
  for (int i = 0; i < p.length(); ++i) {
    const int part = p.parts()[i];
    std::vector<int> row(part);
    for (int j = 0; j < part; ++j) row[j] = (part - j) + (cols[j] - i) - 1;
    grid.push_back(std::move(row));
  }
  return grid;
}

std::vector<int> beta_set(const Partition& p) {
  const int len = p.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p.parts()[i] + len - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end())
    throw Error(ErrorKind::InvalidBetaSet, "beta-set elements must be distinct");
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) {
    parts[i] = beta[i] - (len - 1 - i);
    if (parts[i] <= 0)
      throw Error(ErrorKind::InvalidBetaSet,
                  "beta-set reconstruction yields a non-positive part");
  }
  return from_parts(std::move(parts));
}

bool is_s_core(const Partition& p, int s) {
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "s must be at least 2");
  const auto beta = beta_set(p);  // descending
  for (int h : beta) {
    if (h < s) break;
    if (!std::binary_search(beta.begin(), beta.end(), h - s, std::greater<>()))
      return false;
  }
  return true;
}

bool is_s_core_by_hooks(const Partition& p, int s) {
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "s must be at least 2");
  for (const auto& row : hook_lengths(p))
    for (int h : row)
      if (h % s == 0) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  return from_parts(column_heights(p));
}

bool is_strict(const Partition& p) {
  return std::adjacent_find(p.parts().begin(), p.parts().end()) ==
         p.parts().end();
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

int durfee_length(const Partition& p) {
  int k = 0;
  while (k < p.length() && p.parts()[k] >= k + 1) ++k;
  return k;
}

std::vector<int> main_diagonal_hooks(const Partition& p) {
  const auto cols = column_heights(p);
  const int r = durfee_length(p);
  std::vector<int> hooks(r);
  for (int i = 0; i < r; ++i) hooks[i] = (p.parts()[i] - i) + (cols[i] - i) - 1;
  return hooks;
}

Partition from_diagonal_hooks(std::vector<int> hooks) {
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (hooks[i] <= 0 || hooks[i] % 2 == 0)
      throw Error(ErrorKind::InvalidArgument,
                  "diagonal hooks must be odd positive integers");
    if (i > 0 && hooks[i] == hooks[i - 1])
      throw Error(ErrorKind::InvalidArgument, "diagonal hooks must be distinct");
  }
  const int r = static_cast<int>(hooks.size());
  // Frobenius coordinates: arm == leg == (h - 1) / 2 on a self-conjugate diagram.
  std::vector<int> arm(r);
  for (int i = 0; i < r; ++i) arm[i] = (hooks[i] - 1) / 2;
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) parts.push_back(arm[i] + i + 1);
  const int rows = r == 0 ? 0 : arm[0] + 1;
  for (int i = r + 1; i <= rows; ++i) {
    int count = 0;
    for (int j = 0; j < r; ++j)
      if (arm[j] + j + 1 >= i) ++count;
    parts.push_back(count);
  }
  return from_parts(std::move(parts));
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
      throw Error(ErrorKind::InvalidPartition,
                  "malformed partition text: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_parts(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(from_parts(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(size, size);
  return out;
}

}  // namespace corestat
