#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hookbias/errors.hpp"
#include "hookbias/injections.hpp"

using namespace hookbias;

namespace {

struct Example {
  MapId map;
  std::uint32_t t;
  const char* input;
  const char* output;
  int case_number;  // 0 when not pinned
};

// Worked examples whose outputs are reproduced exactly.
const Example kExamples[] = {
    {MapId::phi1, 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1", 1},
    {MapId::phi1, 3, "10,8,7,~4,1", "10,8,7,~3,1,1", 2},
    {MapId::phi2, 3, "10,8,7,~4,1", "10,7,6,~4,1,1,1", 0},
    {MapId::phi2, 3, "~16,8,4,1,1", "~12,6,3,1,1,1,1,1,1,1,1,1", 0},
    {MapId::phi2, 3, "10,~8,7,4,1", "10,7,~6,3,1,1,1,1", 0},
    {MapId::phi3, 3, "8,~7,6,4,2,1", "8,~7,6,3,2,1,1", 0},
    {MapId::phi3, 3, "8,6,~5,4,1,1,1,1,1", "~9,8,6,3,1,1", 0},
    {MapId::phi3, 3, "7,6,~5,2", "7,6,3,~2,2", 0},
    {MapId::zeta1, 4, "11,6,~5,2,1,1", "11,6,~4',2,1,1,1", 0},
    {MapId::zeta1, 4, "11,~10,6,5,2,1", "11,~8',6,4,2,1,1,1,1", 0},
    {MapId::zeta2, 6, "11,7,~6,5,3,2,1", "11,~6,6,5,3,2,1,1", 0},
    {MapId::zeta3, 6, "~11,4,2,1,1,1,1,1", "~15,4,2,1", 0},
    {MapId::zeta3, 6, "~11,5,2", "6,5,3,~2,2", 0},
};

}  // namespace

TEST_CASE("worked examples reproduce exactly and invert") {
  for (const auto& ex : kExamples) {
    CAPTURE(ex.input);
    auto in = parse_opo(ex.input);
    auto trace = apply_map(ex.map, ex.t, in);
    CHECK(trace.output == parse_opo(ex.output));
    CHECK(trace.output.weight() == in.weight());
    if (ex.case_number != 0) CHECK(trace.case_number == ex.case_number);
    CHECK(invert_map(ex.map, ex.t, trace.output) == in);
  }
  CHECK(apply_map(MapId::phi1, 3, parse_opo("10,~8,7,4,1")).codomain_hit == SetId::A1);
  CHECK(apply_map(MapId::phi1, 3, parse_opo("10,8,7,~4,1")).codomain_hit == SetId::C);
  CHECK(apply_map(MapId::phi1, 3, parse_opo("10,~8,7,4,1")).case_label == "phi1/Case 1");
}

TEST_CASE("zeta2 example input outside D is rejected") {
  // Part 6 is divisible by t = 6, so the input is not in D_6.
  auto in = parse_opo("14,11,7,6,5,~2,1");
  CHECK_FALSE(set_membership(SetId::D, 6, in));
  CHECK_THROWS_AS(apply_map(MapId::zeta2, 6, in), domain_error);
}

TEST_CASE("zeta3 leaves 2t+2 fixed") {
  auto in = parse_opo("14,~13,12,4,2,1");
  auto trace = apply_map(MapId::zeta3, 6, in);
  CHECK(trace.output == in);
  CHECK(trace.case_number == 1);
  // The output quoted with 14 split is already the image of another element of F_6.
  auto quoted = parse_opo("~13,12,12,4,2,1,1,1");
  auto other = invert_map(MapId::zeta3, 6, quoted);
  CHECK_FALSE(other == in);
  CHECK(apply_map(MapId::zeta3, 6, other).output == quoted);
}

TEST_CASE("part maps") {
  CHECK(apply_part_map(PartMapKind::descend, 4, 3).to_string() == "3,1");
  CHECK(apply_part_map(PartMapKind::descend, 10, 3).to_string() == "10");
  CHECK(apply_part_map(PartMapKind::descend, 10, 4).to_string() == "8,1,1");
  CHECK(apply_part_map(PartMapKind::descend, 8, 3).to_string() == "6,1,1");
  CHECK(apply_part_map(PartMapKind::descend, 8, 3).weight() == 8);
  CHECK(apply_part_map(PartMapKind::descend_keep_2t2, 8, 3).to_string() == "8");
  CHECK(apply_part_map(PartMapKind::ascend, 6, 3).to_string() == "8");
  CHECK(apply_part_map(PartMapKind::ascend_keep_2t, 6, 3).to_string() == "6");
  for (std::uint32_t t = 3; t <= 8; ++t) {
    for (part_t p = 1; p <= 200; ++p) REQUIRE(apply_part_map(PartMapKind::descend, p, t).weight() == p);
  }
}

TEST_CASE("t=4 Case 4 tagged patch") {
  std::set<std::int64_t> with_five;
  std::set<std::int64_t> without_five;
  for (std::uint32_t n = 7; n <= 26; ++n) {
    for (const auto& x : enumerate_set(SetId::F, 4, n)) {
      auto trace = apply_map(MapId::zeta3, 4, x);
      if (trace.case_number != 4) continue;
      REQUIRE(trace.output.tagged);
      REQUIRE(trace.codomain_hit == SetId::Ahat4);
      const Partition plain = x.plain_parts();
      bool has_five = false;
      for (auto p : plain.blocks()) has_five |= p.part % 5 == 0;
      if (has_five) {
        REQUIRE(trace.output.overlined == 8);
        with_five.insert(case_signature(trace.output, 4));
      } else {
        REQUIRE(trace.output.overlined == 4);
        without_five.insert(case_signature(trace.output, 4));
      }
      REQUIRE(invert_map(MapId::zeta3, 4, trace.output) == x);
    }
  }
  CHECK(with_five == std::set<std::int64_t>{-1});
  CHECK(without_five == std::set<std::int64_t>{0});
}

TEST_CASE("error kinds are distinct") {
  CHECK_THROWS_AS(apply_map(MapId::phi1, 4, parse_opo("~1")), domain_error);
  CHECK_THROWS_AS(apply_map(MapId::zeta1, 3, parse_opo("~1")), domain_error);
  CHECK_THROWS_AS(apply_map(MapId::phi1, 3, parse_opo("~3")), domain_error);
  CHECK_THROWS_AS(invert_map(MapId::phi1, 3, parse_opo("~9")), not_in_image_error);
  CHECK_THROWS_AS(invert_map(MapId::phi3, 3, parse_opo("~5")), not_in_image_error);
  CHECK_THROWS_AS(invert_map(MapId::phi1, 4, parse_opo("~9")), domain_error);
}

TEST_CASE("round trips and injectivity over small domains") {
  struct Run {
    MapId map;
    std::uint32_t t;
    std::uint32_t n_max;
  };
  for (Run r : {Run{MapId::phi1, 3, 20}, Run{MapId::phi2, 3, 20}, Run{MapId::phi3, 3, 20},
                Run{MapId::phi1, 5, 18}, Run{MapId::phi3, 5, 20}, Run{MapId::zeta1, 4, 18},
                Run{MapId::zeta2, 4, 18}, Run{MapId::zeta3, 4, 20}, Run{MapId::zeta3, 6, 20}}) {
    CAPTURE(map_name(r.map));
    CAPTURE(r.t);
    for (std::uint32_t n = 0; n <= r.n_max; ++n) {
      std::map<std::string, std::string> seen;
      for (SetId dom : map_domain(r.map)) {
        for (const auto& x : enumerate_set(dom, r.t, n)) {
          auto trace = apply_map(r.map, r.t, x);
          REQUIRE(trace.output.weight() == n);
          REQUIRE(set_membership(trace.codomain_hit, r.t, trace.output));
          auto [it, fresh] = seen.emplace(trace.output.to_string(), x.to_string());
          REQUIRE_MESSAGE(fresh, x.to_string() << " and " << it->second << " collide");
          REQUIRE(invert_map(r.map, r.t, trace.output) == x);
        }
      }
    }
  }
}

TEST_CASE("zeta2 inverse is total on A1") {
  for (std::uint32_t t : {4u, 6u}) {
    for (std::uint32_t n = 0; n <= 18; ++n) {
      auto a1 = enumerate_set(SetId::A1, t, n);
      REQUIRE(a1.size() == enumerate_set(SetId::D, t, n).size());
      for (const auto& y : a1) {
        auto x = invert_map(MapId::zeta2, t, y);
        REQUIRE(set_membership(SetId::D, t, x));
        REQUIRE(apply_map(MapId::zeta2, t, x).output == y);
      }
    }
  }
}

TEST_CASE("phi3 is vacuous below 2t-1") {
  for (std::uint32_t n = 0; n <= 8; ++n) CHECK(enumerate_set(SetId::F, 5, n).empty());
  CHECK_FALSE(enumerate_set(SetId::F, 5, 9).empty());
}
