#include "corestat/family.hpp"

#include <charconv>

#include "corestat/error.hpp"

namespace corestat {

FamilySpec::FamilySpec(Family f, int n_, int cap_) : family(f), n(n_), cap(cap_) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus n must be >= 2");
  if (cap < 0) throw Error(ErrorKind::InvalidArgument, "capacity must be >= 0");
}

Family parse_family(std::string_view text) {
  if (text == "core") return Family::Core;
  if (text == "strict") return Family::Strict;
  if (text == "selfconj") return Family::SelfConj;
  throw Error(ErrorKind::InvalidArgument,
              "unknown family '" + std::string(text) + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Core: return "core";
    case Family::Strict: return "strict";
    case Family::SelfConj: return "selfconj";
  }
  return "?";
}

Statistic parse_statistic(std::string_view text) {
  if (text == "length") return Statistic::length();
  if (text == "size") return Statistic::size();
  if (text == "durfee") return Statistic::durfee();
  if (text.starts_with("power:")) {
    const auto digits = text.substr(6);
    int k = -1;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 0)
      return Statistic::power_sum(k);
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown statistic '" + std::string(text) + "'");
}

std::string to_string(const Statistic& s) {
  switch (s.kind) {
    case Statistic::Kind::Length: return "length";
    case Statistic::Kind::Size: return "size";
    case Statistic::Kind::Durfee: return "durfee";
    case Statistic::Kind::PowerSum: return "power:" + std::to_string(s.power);
  }
  return "?";
}

void require_supported(Family family, const Statistic& stat) {
  if (family == Family::SelfConj) return;
  if (stat.kind == Statistic::Kind::Length || stat.kind == Statistic::Kind::Size)
    return;
  throw Error(ErrorKind::UnsupportedStatistic,
              to_string(stat) + " is only defined on the selfconj family");
}

}  // namespace corestat
