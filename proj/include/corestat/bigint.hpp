#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace corestat {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// 50 significant decimal digits; used only at the final float boundary.
using HighFloat = boost::multiprecision::mpfr_float_50;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline double to_double(const Rational& q) {
  return static_cast<double>(HighFloat(q));
}

inline long double to_long_double(const Rational& q) {
  return static_cast<long double>(HighFloat(q));
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt binomial(std::int64_t n, std::int64_t k);

inline BigInt pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace corestat
