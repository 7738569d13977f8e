#include "corestat/bigint.hpp"
#include "corestat/error.hpp"

namespace corestat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::InvalidBetaSet: return "invalid-beta-set";
    case ErrorKind::InvalidVector: return "invalid-vector";
    case ErrorKind::NotCore: return "not-core";
    case ErrorKind::NotSelfConjugate: return "not-self-conjugate";
    case ErrorKind::PerimeterExceeded: return "perimeter-exceeded";
    case ErrorKind::CardinalityLimit: return "cardinality-limit";
    case ErrorKind::ZeroVariance: return "zero-variance";
    case ErrorKind::AdjacentSupport: return "adjacent-support";
    case ErrorKind::NonRealRoot: return "non-real-root";
    case ErrorKind::UnsupportedStatistic: return "unsupported-statistic";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace corestat
