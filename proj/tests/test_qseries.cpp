#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hookbias/errors.hpp"
#include "hookbias/opo.hpp"
#include "hookbias/qseries.hpp"
#include "oracles.hpp"

using namespace hookbias;

namespace {

TruncatedSeries from_list(std::uint32_t degree, std::vector<coeff_t> c) { return TruncatedSeries(degree, std::move(c)); }

}  // namespace

TEST_CASE("decimal rendering round-trips") {
  for (coeff_t v : {coeff_t{0}, coeff_t{7}, coeff_t{-42}, coeff_t{1} << 100, -(coeff_t{1} << 120)}) {
    CHECK(from_decimal(to_decimal(v)) == v);
  }
  CHECK(to_decimal(coeff_t{-305}) == "-305");
  coeff_t min = coeff_t{1} << 126;
  min = -min - min;
  CHECK(from_decimal(to_decimal(min)) == min);
  CHECK_THROWS_AS(from_decimal("12a"), parse_error);
  CHECK_THROWS_AS(from_decimal("-"), parse_error);
  CHECK_THROWS_AS(from_decimal("999999999999999999999999999999999999999999"), parse_error);
}

TEST_CASE("basic arithmetic") {
  auto one_plus_q = from_list(2, {1, 1});
  auto one_minus_q = from_list(2, {1, -1});
  CHECK(one_plus_q * one_minus_q == from_list(2, {1, 0, -1}));
  CHECK((one_plus_q + one_minus_q) == from_list(2, {2}));
  CHECK((one_plus_q - one_minus_q) == from_list(2, {0, 2}));
  CHECK(one_plus_q.scaled(-3) == from_list(2, {-3, -3}));

  auto geometric = from_list(6, {1, -1}).inverse();
  CHECK(geometric.shifted(3) == from_list(6, {0, 0, 0, 1, 1, 1, 1}));

  // Degrees are normalized to the smaller one.
  CHECK((from_list(5, {1, 1}) + from_list(3, {1})).degree() == 3);

  const std::uint32_t t = 3;
  auto e_factor = TruncatedSeries::monomial(12, 2 * t + 1) + TruncatedSeries::monomial(12, 2 * t + 3);
  CHECK(e_factor == from_list(12, {0, 0, 0, 0, 0, 0, 0, 1, 0, 1}));
}

TEST_CASE("inverse") {
  CHECK(from_list(8, {1, -1}).inverse() == from_list(8, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(from_list(4, {2, 1}).inverse(), domain_error);
  CHECK_THROWS_AS(from_list(4, {0, 1}).inverse(), domain_error);

  auto partitions = pochhammer(1, 1, 6).inverse();
  CHECK(partitions == from_list(6, {1, 1, 2, 3, 5, 7, 11}));

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<coeff_t> c{trial % 2 ? 1 : -1};
    for (int i = 0; i < 20; ++i) c.push_back(coef(rng));
    auto s = from_list(20, c);
    CHECK(s.inverse().inverse() == s);
    CHECK(s * s.inverse() == TruncatedSeries::one(20));
  }
  auto euler = pochhammer(1, 1, 80);
  CHECK(euler * euler.inverse() == TruncatedSeries::one(80));
}

TEST_CASE("division by 1 - q^m matches multiplying by the inverse") {
  auto s = from_list(30, {3, -1, 4, 1, -5, 9, 2, -6});
  for (std::uint64_t m : {1, 2, 5, 31}) {
    auto direct = s * (TruncatedSeries::one(30) - TruncatedSeries::monomial(30, m)).inverse();
    CHECK(s.divided_by_one_minus(m) == direct);
  }
}

TEST_CASE("pochhammer products") {
  // Expand the product factor by factor as an independent oracle.
  const std::uint32_t N = 40;
  std::vector<long long> poly(N + 1, 0);
  poly[0] = 1;
  for (std::uint32_t e = 1; e <= N; ++e) {
    for (std::uint32_t i = N; i >= e; --i) poly[i] -= poly[i - e];
  }
  auto euler = pochhammer(1, 1, N);
  for (std::uint32_t i = 0; i <= N; ++i) CHECK(euler[i] == poly[i]);
  // Pentagonal numbers 0,1,2,5,7,12,15,22,26,35,40.
  CHECK(euler[5] == 1);
  CHECK(euler[7] == 1);
  CHECK(euler[12] == -1);
  CHECK(euler[3] == 0);

  CHECK(pochhammer(11, 1, 10) == TruncatedSeries::one(10));
  // (q^{3t+3};q^{t+1}) at t=3: 12+16 = 28 cancels against the factor 28.
  auto e_part = pochhammer(12, 4, 40);
  CHECK(e_part[12] == -1);
  CHECK(e_part[16] == -1);
  CHECK(e_part[28] == 0);
  CHECK(e_part[36] == 1);
}

TEST_CASE("kim series against enumeration") {
  CHECK(kim_bt2_series(2, 10)[6] == 6);
  CHECK(kim_bt2_series(3, 10)[3] == 1);
  for (std::uint32_t t = 2; t <= 9; ++t) {
    auto s = kim_bt2_series(t, 22);
    CHECK(s[0] == 0);
    CHECK(s[1] == 0);
    for (std::uint32_t n = 0; n <= 22; ++n) REQUIRE(s[n] == static_cast<coeff_t>(oracle::b_tk(t, 2, n)));
  }
  CHECK_THROWS_AS(kim_bt2_series(1, 5), domain_error);
}

TEST_CASE("decomposition terms") {
  CHECK(decomposition_term(Term::b, 3, 10)[4] == 3);
  for (std::uint32_t t = 3; t <= 8; ++t) {
    for (Term term : {Term::a, Term::b, Term::c, Term::d, Term::e, Term::f}) {
      auto s = decomposition_term(term, t, 60);
      CHECK(s[0] == 0);
      for (std::uint32_t n = 0; n <= 60; ++n) REQUIRE(s[n] >= 0);
    }
    auto e = decomposition_term(Term::e, t, 60);
    for (std::uint32_t n = 0; n < 2 * t + 1; ++n) CHECK(e[n] == 0);
    CHECK(e[2 * t + 1] == 1);
  }
  CHECK_THROWS_AS(decomposition_term(Term::a, 2, 10), domain_error);
  CHECK(parse_term("c") == Term::c);
  CHECK_THROWS_AS(parse_term("g"), parse_error);
}

TEST_CASE("decomposition identities hold coefficientwise") {
  for (std::uint32_t t = 3; t <= 10; ++t) {
    auto lhs = kim_bt2_series(t + 1, 80) - kim_bt2_series(t, 80);
    CHECK(lhs == decomposition_sum(t, 80));
  }
  CHECK(decomposition_sign(Term::a, 3) == 1);
  CHECK(decomposition_sign(Term::b, 3) == -2);
  CHECK(decomposition_sign(Term::a, 4) == 2);
  CHECK(decomposition_sign(Term::c, 4) == -1);
}

TEST_CASE("term coefficients count the sets they describe") {
  const std::map<Term, std::vector<std::string>> sets{{Term::a, {"A"}}, {Term::b, {"B"}}, {Term::c, {"C"}},
                                                      {Term::d, {"D"}}, {Term::e, {"E"}}, {Term::f, {"F"}}};
  for (std::uint32_t t : {3u, 4u, 5u}) {
    for (const auto& [term, names] : sets) {
      auto s = decomposition_term(term, t, 16);
      for (std::uint32_t n = 0; n <= 16; ++n) {
        REQUIRE(s[n] == static_cast<coeff_t>(oracle::set_size(names[0], t, n)));
      }
    }
  }
}

TEST_CASE("overflow fails loudly") {
  coeff_t big = coeff_t{1} << 125;
  auto s = from_list(2, {1, big});
  CHECK_THROWS_AS(s.scaled(8), overflow_error);
  CHECK_THROWS_AS(s * s * s, overflow_error);
  CHECK_THROWS_AS(s + s + s + s, overflow_error);
}

TEST_CASE("large truncation stays exact") {
  // p(400) needs 65 bits; the recurrence must agree with direct inversion.
  auto p = pochhammer(1, 1, 400).inverse();
  CHECK(to_decimal(p[400]) == "6727090051741041926");
  CHECK(to_decimal(p[100]) == "190569292");
}
