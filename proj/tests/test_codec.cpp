#include <doctest.h>

#include "corestat/codec.hpp"
#include "corestat/enumerate.hpp"
#include "corestat/error.hpp"

using namespace corestat;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("core vectors validate their shape") {
  CHECK_NOTHROW(CoreVector(4, 3, {3, 0, 1}));
  CHECK(kind_of([] { CoreVector(4, 3, {3, 0}); }) == ErrorKind::InvalidVector);
  CHECK(kind_of([] { CoreVector(4, 3, {4, 0, 1}); }) == ErrorKind::InvalidVector);
  CHECK(kind_of([] { CoreVector(4, 3, {-1, 0, 1}); }) == ErrorKind::InvalidVector);
  CHECK(CoreVector(4, 3, {3, 0, 1}).is_strict());
  CHECK_FALSE(CoreVector(4, 3, {3, 1, 0}).is_strict());
}

TEST_CASE("diagonal vectors enforce the antipodal constraint") {
  CHECK_NOTHROW(DiagVector(3, 1, {0, 0, 1}));
  CHECK(kind_of([] { DiagVector(3, 1, {1, 0, 1}); }) == ErrorKind::InvalidVector);
  CHECK(kind_of([] { DiagVector(3, 1, {0, 1, 0}); }) == ErrorKind::InvalidVector);
  CHECK(kind_of([] { DiagVector(4, 1, {1, 0, 0, 1}); }) == ErrorKind::InvalidVector);
  CHECK_NOTHROW(DiagVector(4, 1, {1, 1, 0, 0}));
}

TEST_CASE("figure partition encodes to (3,0,1)") {
  const Partition p = from_parts({6, 3, 2, 1});
  const CoreVector v = encode_core(p, 4, 3);
  CHECK(v.x() == std::vector<int>{3, 0, 1});
  CHECK(decode_core(v) == p);
  CHECK(stat_length(v) == 4);
  CHECK(stat_size(v) == 12);
  CHECK(stat_size_rational(v) == 12);

  CHECK(encode_core(from_parts({}), 5, 2).x() == std::vector<int>{0, 0, 0, 0});
  CHECK(kind_of([&] { encode_core(p, 4, 2); }) == ErrorKind::PerimeterExceeded);
  CHECK(kind_of([&] { encode_core(p, 3, 9); }) == ErrorKind::NotCore);
}

TEST_CASE("decode examples and closed-form statistics") {
  CHECK(decode_core(CoreVector(3, 1, {0, 1})) == from_parts({2}));
  CHECK(beta_set(decode_core(CoreVector(3, 1, {0, 1}))) == std::vector<int>{2});
  CHECK(decode_core(CoreVector(4, 2, {0, 0, 0})) == from_parts({}));
  CHECK(stat_length(CoreVector(4, 2, {0, 0, 0})) == 0);
  CHECK(stat_size(CoreVector(4, 2, {0, 0, 0})) == 0);
  CHECK(stat_length(CoreVector(3, 1, {1, 0})) == 1);
  CHECK(stat_size(CoreVector(3, 1, {1, 0})) == 1);
  CHECK(stat_length(CoreVector(3, 1, {0, 1})) == 1);
  CHECK(stat_size(CoreVector(3, 1, {0, 1})) == 2);
}

TEST_CASE("self-conjugate codec examples") {
  const DiagVector v = encode_selfconj(from_parts({3, 1, 1}), 3, 1);
  CHECK(v.x() == std::vector<int>{0, 0, 1});
  CHECK(stat_durfee(v) == 1);
  CHECK(stat_power_sum(v, 1) == 5);
  CHECK(diagonal_hooks(v) == std::vector<std::int64_t>{5});

  CHECK(encode_selfconj(from_parts({}), 4, 2).x() == std::vector<int>{0, 0, 0, 0});
  for (int k = 0; k <= 4; ++k) CHECK(stat_power_sum(DiagVector(4, 2, {0, 0, 0, 0}), k) == 0);

  const DiagVector one = encode_selfconj(from_parts({1}), 3, 1);
  CHECK(one.x() == std::vector<int>{1, 0, 0});
  CHECK(stat_power_sum(one, 3) == 1);

  CHECK(kind_of([] { encode_selfconj(from_parts({2}), 3, 1); }) == ErrorKind::NotSelfConjugate);
  // (2,2) has hooks {3,2,2,1}: not a 2-core.
  CHECK(kind_of([] { encode_selfconj(from_parts({2, 2}), 2, 5); }) == ErrorKind::NotCore);
  CHECK(kind_of([] { encode_selfconj(from_parts({3, 1, 1}), 3, 0); }) == ErrorKind::PerimeterExceeded);
}

TEST_CASE("vector text format") {
  CHECK(parse_vector("3,0,1") == std::vector<int>{3, 0, 1});
  CHECK(format_vector({3, 0, 1}) == "3,0,1");
  CHECK_THROWS_AS(parse_vector("3,,1"), Error);
}

TEST_CASE("property: eta is a bijection with matching statistics (n <= 8, d <= 3)") {
  for (int n = 2; n <= 8; ++n)
    for (int d = 0; d <= 3; ++d)
      enumerate(FamilySpec(Family::Core, n, d), [&](const std::vector<int>& x) {
        const CoreVector v(n, d, x);
        const Partition p = decode_core(v);
        REQUIRE(encode_core(p, n, d) == v);
        REQUIRE(is_s_core_by_hooks(p, n));
        REQUIRE(p.perimeter() <= d * n);
        REQUIRE(v.is_strict() == is_strict(p));
        if (n <= 7) {
          REQUIRE(stat_length(v) == p.length());
          REQUIRE(stat_size(v) == p.size());
          REQUIRE(stat_size_rational(v) == p.size());
        }
      });
}

TEST_CASE("property: every bounded-perimeter core is hit (encode then decode)") {
  // Count n-cores with perimeter <= dn directly from partitions: every such
  // core has size at most the largest size in the family.
  for (int n = 2; n <= 5; ++n)
    for (int d = 0; d <= 2; ++d) {
      std::int64_t max_size = 0;
      enumerate(FamilySpec(Family::Core, n, d), [&](const std::vector<int>& x) {
        max_size = std::max(max_size, stat_size(CoreVector(n, d, x)));
      });
      BigInt found = 0;
      for (int s = 0; s <= max_size; ++s)
        for (const auto& p : partitions_of(s))
          if (p.perimeter() <= d * n && is_s_core_by_hooks(p, n)) {
            ++found;
            REQUIRE(decode_core(encode_core(p, n, d)) == p);
          }
      CHECK(found == count(FamilySpec(Family::Core, n, d)));
    }
}

TEST_CASE("property: zeta is a bijection (n <= 7, e <= 2)") {
  for (int n = 2; n <= 7; ++n)
    for (int e = 0; e <= 2; ++e)
      enumerate(FamilySpec(Family::SelfConj, n, e), [&](const std::vector<int>& x) {
        const DiagVector v(n, e, x);
        const Partition p = decode_selfconj(v);
        REQUIRE(is_self_conjugate(p));
        REQUIRE(is_s_core_by_hooks(p, n));
        REQUIRE(p.perimeter() <= 2 * e * n);
        REQUIRE(encode_selfconj(p, n, e) == v);
        REQUIRE(stat_power_sum(v, 1) == p.size());
        REQUIRE(stat_power_sum(v, 0) == stat_durfee(v));
        REQUIRE(stat_durfee(v) == durfee_length(p));
        const auto md = main_diagonal_hooks(p);
        REQUIRE(diagonal_hooks(v) == std::vector<std::int64_t>(md.begin(), md.end()));
      });
}

TEST_CASE("second power sum is not the size") {
  // M^(2) and the size differ as soon as a hook exceeds 1.
  const DiagVector v = encode_selfconj(from_parts({3, 1, 1}), 3, 1);
  CHECK(stat_power_sum(v, 2) == 25);
  CHECK(stat_power_sum(v, 1) == 5);
}

TEST_CASE("property: strict (n, dn+1)-cores are the strict n-cores of perimeter <= dn") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 2; ++d) {
      BigInt both = 0;
      for (int s = 0; s <= 40; ++s)
        for (const auto& p : partitions_of(s)) {
          if (!is_strict(p)) continue;
          const bool simultaneous = is_s_core(p, n) && is_s_core(p, d * n + 1);
          const bool bounded = is_s_core(p, n) && p.perimeter() <= d * n;
          REQUIRE(simultaneous == bounded);
          if (bounded) ++both;
        }
      CHECK(both == count(FamilySpec(Family::Strict, n, d)));
    }
}
