#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hookbias/errors.hpp"
#include "hookbias/opo.hpp"
#include "hookbias/qseries.hpp"
#include "oracles.hpp"

using namespace hookbias;

namespace {

std::set<std::string> texts(const std::vector<OpoOverpartition>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(x.to_string());
  return out;
}

OpoOverpartition to_library(const oracle::Opo& x, bool tagged) {
  Partition base = Partition::from_parts(x.plain);
  base = multiset_union(base, Partition::from_parts({x.over}));
  return OpoOverpartition(base, x.over, tagged);
}

}  // namespace

TEST_CASE("t-adic factorization") {
  CHECK(t_adic_factor(8, 3) == TAdicFactorization{0, 8});
  CHECK(t_adic_factor(6, 3) == TAdicFactorization{1, 2});
  CHECK(t_adic_factor(12, 4) == TAdicFactorization{1, 3});
  CHECK(t_adic_factor(54, 3) == TAdicFactorization{3, 2});
  CHECK_THROWS_AS(t_adic_factor(0, 3), domain_error);
}

TEST_CASE("lift deficit") {
  CHECK(lift_deficit(6, 3) == 2);
  for (std::uint32_t t = 2; t <= 9; ++t) {
    CHECK(lift_deficit(1, t) == 0);
    for (std::uint64_t m = 1; m <= 300; ++m) {
      REQUIRE(lift_deficit(m, t) == oracle::g(m, t));
      REQUIRE((lift_deficit(m, t) == 0) == (m % t != 0));
      auto [k, c] = t_adic_factor(m, t);
      REQUIRE(m + lift_deficit(m, t) == c * oracle::ipow(t + 1, k));
    }
  }
}

TEST_CASE("OPO object invariants") {
  CHECK_THROWS_AS(OpoOverpartition(Partition::from_parts({3, 1}), 2), domain_error);
  OpoOverpartition x(Partition::from_parts({3, 3, 1}), 3);
  CHECK(x.plain_parts().to_string() == "3,1");
  CHECK(x.weight() == 7);
  OpoOverpartition y(Partition::from_parts({3, 3, 1}), 3, true);
  CHECK_FALSE(x == y);
  CHECK(x.to_string() != y.to_string());
}

TEST_CASE("enumerate_opo") {
  auto all = enumerate_opo(4, [](part_t) { return true; }, [](part_t, part_t) { return true; });
  CHECK(all.size() == 7);
  auto odd = enumerate_opo(4, [](part_t o) { return o % 2 == 1; }, [](part_t p, part_t) { return p % 2 == 1; });
  CHECK(texts(odd) == std::set<std::string>{"3,~1", "~3,1", "~1,1,1,1"});
  CHECK(enumerate_opo(0, [](part_t) { return true; }, [](part_t, part_t) { return true; }).empty());
  for (std::uint32_t n = 0; n <= 14; ++n) {
    auto mine = enumerate_opo(n, [](part_t) { return true; }, [](part_t, part_t) { return true; });
    REQUIRE(mine.size() == oracle::all_opo(n).size());
    for (std::size_t i = 1; i < mine.size(); ++i) REQUIRE(mine[i - 1] < mine[i]);
    for (const auto& x : mine) {
      REQUIRE(x.weight() == n);
      REQUIRE(parse_opo(x.to_string()) == x);
    }
  }
}

TEST_CASE("worked membership examples") {
  CHECK(set_membership(SetId::B, 3, parse_opo("10,~8,7,4,1")));
  CHECK(set_membership(SetId::A1, 3, parse_opo("10,7,~6,3,1,1,1,1")));
  auto c_example = parse_opo("10,8,7,~3,1,1");
  CHECK(c_example.weight() == 30);
  CHECK(set_membership(SetId::C, 3, c_example));
  auto ahat = parse_opo("11,~8',6,4,2,1,1,1,1");
  CHECK(ahat.weight() == 35);
  CHECK(set_membership(SetId::Ahat3, 4, ahat));
  CHECK_FALSE(set_membership(SetId::A1, 4, ahat));  // tag is part of identity

  CHECK(texts(enumerate_set(SetId::B, 3, 4)) == std::set<std::string>{"~4", "~2,2", "~2,1,1"});
  for (std::uint32_t t = 3; t <= 6; ++t) {
    for (std::uint32_t n = 0; n < 2 * t + 1; ++n) CHECK(enumerate_set(SetId::E, t, n).empty());
  }
}

TEST_CASE("regime errors") {
  CHECK_THROWS_AS(enumerate_set(SetId::Ahat3, 3, 10), domain_error);
  CHECK_THROWS_AS(set_membership(SetId::Ahat4, 5, parse_opo("~2'")), domain_error);
  CHECK_THROWS_AS(enumerate_set(SetId::B, 2, 4), domain_error);
  CHECK(parse_set_id("Ahat3") == SetId::Ahat3);
  CHECK_THROWS_AS(parse_set_id("G"), parse_error);
}

TEST_CASE("membership matches the direct definitions on every object") {
  for (std::uint32_t t = 3; t <= 6; ++t) {
    for (std::uint32_t n = 0; n <= 13; ++n) {
      for (const auto& x : oracle::all_opo(n)) {
        for (SetId id : kAllSets) {
          if (!set_defined_for(id, t)) continue;
          bool tagged = set_is_tagged(id);
          bool expected = oracle::member(set_name(id), t, x);
          REQUIRE(set_membership(id, t, to_library(x, tagged)) == expected);
          // Wrong tag never belongs.
          REQUIRE_FALSE(set_membership(id, t, to_library(x, !tagged)));
        }
      }
    }
  }
}

TEST_CASE("A splits into its halves, as does the tagged copy") {
  for (std::uint32_t t = 3; t <= 6; ++t) {
    for (std::uint32_t n = 0; n <= 24; ++n) {
      auto a = enumerate_set(SetId::A, t, n);
      auto a1 = texts(enumerate_set(SetId::A1, t, n));
      auto a2 = texts(enumerate_set(SetId::A2, t, n));
      REQUIRE(a1.size() + a2.size() == a.size());
      for (const auto& s : a1) REQUIRE(a2.count(s) == 0);
      if (t % 2 == 0) {
        auto h3 = enumerate_set(SetId::Ahat3, t, n);
        auto h4 = enumerate_set(SetId::Ahat4, t, n);
        REQUIRE(h3.size() + h4.size() == a.size());
      }
    }
  }
}

TEST_CASE("set sizes against independent counts") {
  for (std::uint32_t t = 3; t <= 5; ++t) {
    for (SetId id : kAllSets) {
      if (!set_defined_for(id, t)) continue;
      auto sizes = set_cardinalities(id, t, 14);
      for (std::uint32_t n = 0; n <= 14; ++n) REQUIRE(sizes[n] == oracle::set_size(set_name(id), t, n));
    }
  }
}

TEST_CASE("membership survives re-parsing") {
  for (SetId id : {SetId::A1, SetId::Ahat4, SetId::D, SetId::F}) {
    for (const auto& x : enumerate_set(id, 4, 18)) REQUIRE(set_membership(id, 4, parse_opo(x.to_string())));
  }
}
