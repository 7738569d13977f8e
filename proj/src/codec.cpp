#include "corestat/codec.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

#include "corestat/error.hpp"

namespace corestat {

namespace {

void check_range(const std::vector<int>& x, int cap) {
  for (int v : x)
    if (v < 0 || v > cap)
      throw Error(ErrorKind::InvalidVector,
                  "vector entry " + std::to_string(v) + " outside [0, " +
                      std::to_string(cap) + "]");
}

void check_modulus(int n, int cap) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus n must be >= 2");
  if (cap < 0) throw Error(ErrorKind::InvalidArgument, "capacity must be >= 0");
}

}  // namespace

CoreVector::CoreVector(int n, int cap, std::vector<int> x)
    : n_(n), cap_(cap), x_(std::move(x)) {
  check_modulus(n, cap);
  if (static_cast<int>(x_.size()) != n - 1)
    throw Error(ErrorKind::InvalidVector, "core vector must have n-1 entries");
  check_range(x_, cap);
}

bool CoreVector::is_strict() const noexcept {
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (x_[i] != 0 && x_[i + 1] != 0) return false;
  return true;
}

DiagVector::DiagVector(int n, int cap, std::vector<int> x)
    : n_(n), cap_(cap), x_(std::move(x)) {
  check_modulus(n, cap);
  if (static_cast<int>(x_.size()) != n)
    throw Error(ErrorKind::InvalidVector, "diagonal vector must have n entries");
  check_range(x_, cap);
  for (int i = 0; i < n; ++i)
    if (x_[i] != 0 && x_[n - 1 - i] != 0)
      throw Error(ErrorKind::InvalidVector,
                  "antipodal entries of a diagonal vector are both nonzero");
}

CoreVector encode_core(const Partition& p, int n, int cap) {
  check_modulus(n, cap);
  if (!is_s_core(p, n))
    throw Error(ErrorKind::NotCore, "partition is not an n-core");
  if (p.perimeter() > cap * n)
    throw Error(ErrorKind::PerimeterExceeded,
                "perimeter " + std::to_string(p.perimeter()) + " exceeds " +
                    std::to_string(cap * n));
  std::vector<int> x(n - 1, 0);
  for (int h : beta_set(p)) {
    // A core's beta-set never meets the class 0 mod n.
    if (h % n == 0)
      throw Error(ErrorKind::NotCore, "beta-set meets residue class 0");
    ++x[h % n - 1];
  }
  return CoreVector(n, cap, std::move(x));
}

Partition decode_core(const CoreVector& v) {
  std::vector<int> beta;
  for (int i = 1; i < v.n(); ++i)
    for (int t = 0; t < v.x()[i - 1]; ++t) beta.push_back(i + t * v.n());
  return from_beta_set(std::move(beta));
}

std::int64_t stat_length(const CoreVector& v) {
  std::int64_t a = 0;
  for (int xi : v.x()) a += xi;
  return a;
}

std::int64_t stat_size(const CoreVector& v) {
  const std::int64_t n = v.n();
  std::int64_t a = 0, vv = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    const std::int64_t xi = v.x()[i - 1];
    a += xi;
    vv += n * xi * xi + (2 * i - n + 1) * xi;
  }
  return (vv - a * a) / 2;
}

Rational stat_size_rational(const CoreVector& v) {
  const int n = v.n();
  const Rational half_nm1(n - 1, 2);
  Rational total = 0;
  for (int i = 1; i < n; ++i) {
    const Rational xi = v.x()[i - 1];
    total += half_nm1 * xi * xi + (Rational(i) - half_nm1) * xi;
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      total -= Rational(v.x()[i - 1]) * v.x()[j - 1];
  return total;
}

DiagVector encode_selfconj(const Partition& p, int n, int cap) {
  check_modulus(n, cap);
  if (!is_self_conjugate(p))
    throw Error(ErrorKind::NotSelfConjugate, "partition is not self-conjugate");
  if (!is_s_core(p, n))
    throw Error(ErrorKind::NotCore, "partition is not an n-core");
  if (p.perimeter() > 2 * cap * n)
    throw Error(ErrorKind::PerimeterExceeded,
                "perimeter " + std::to_string(p.perimeter()) + " exceeds " +
                    std::to_string(2 * cap * n));
  std::vector<int> x(n, 0);
  for (int h : main_diagonal_hooks(p)) ++x[(h % (2 * n)) / 2];  // residue 2i-1 -> i-1
  return DiagVector(n, cap, std::move(x));
}

std::vector<std::int64_t> diagonal_hooks(const DiagVector& v) {
  std::vector<std::int64_t> hooks;
  const std::int64_t n = v.n();
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t t = 0; t < v.x()[i - 1]; ++t)
      hooks.push_back(2 * i - 1 + 2 * n * t);
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

Partition decode_selfconj(const DiagVector& v) {
  const auto hooks = diagonal_hooks(v);
  return from_diagonal_hooks(std::vector<int>(hooks.begin(), hooks.end()));
}

std::int64_t stat_durfee(const DiagVector& v) {
  std::int64_t a = 0;
  for (int xi : v.x()) a += xi;
  return a;
}

BigInt stat_power_sum(const DiagVector& v, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "power k must be >= 0");
  BigInt total = 0;
  for (std::int64_t h : diagonal_hooks(v)) total += pow(BigInt(h), static_cast<unsigned>(k));
  return total;
}

std::string format_vector(const std::vector<int>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

std::vector<int> parse_vector(const std::string& text) {
  std::vector<int> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
      throw Error(ErrorKind::InvalidVector, "malformed vector text: '" + text + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace corestat
