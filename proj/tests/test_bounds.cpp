// Copyright 2026 The mdcsr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "mdcsr/bounds.hpp"
#include "mdcsr/error.hpp"

using namespace mdcsr;

namespace {

NormalizedRates example_rates() { return NormalizedRates(3, 0, 0, {Rational(0), Rational(1, 3), Rational(2, 3)}); }

NormalizedRates d4_split() { return NormalizedRates(4, 1, 1, {Rational(2, 5), Rational(3, 5)}); }

// Random rate vector with small denominators summing to one.
std::vector<Rational> random_rates(std::size_t count, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 6);
  std::vector<int> w(count);
  int total = 0;
  for (auto& x : w) total += (x = dist(rng));
  if (total == 0) {
    w.back() = 1;
    total = 1;
  }
  std::vector<Rational> out;
  for (int x : w) out.emplace_back(x, total);
  return out;
}

}  // namespace

TEST_CASE("capacity sums") {
  CHECK(stripe_capacity(3, 3, 0) == 6);
  CHECK(stripe_capacity(4, 3, 2) == 2);
  CHECK(stripe_capacity(3, 2, 0) == 5);
  for (int d = 1; d <= 10; ++d)
    for (int k = 0; k <= d; ++k) CHECK(stripe_capacity(d, k, k) == 0);
  CHECK_THROWS_AS(stripe_capacity(3, 2, 3), Error);
  CHECK_THROWS_AS(stripe_capacity(3, 4, 0), Error);
}

TEST_CASE("rate validation") {
  CHECK_THROWS_AS(NormalizedRates(3, 0, 0, {Rational(1, 2), Rational(1, 2)}), Error);
  CHECK_THROWS_AS(NormalizedRates(3, 0, 0, {Rational(1), Rational(1), Rational(-1)}), Error);
  CHECK_THROWS_AS(NormalizedRates(3, 0, 0, {Rational(1, 2), Rational(1, 4), Rational(0)}), Error);
  CHECK_THROWS_AS(NormalizedRates(3, 2, 1, {}), Error);
  const NormalizedRates zero(3, 0, 0, {Rational(0), Rational(0), Rational(0)});
  CHECK(bound_beta(zero) == Rational(0));
  CHECK(mbr_point(zero) == TradeoffPoint{Rational(0), Rational(0)});
  CHECK(intersection_check(zero).intersection == TradeoffPoint{Rational(0), Rational(0)});
}

TEST_CASE("three-level example with rates (0, 1/3, 2/3)") {
  const NormalizedRates r = example_rates();
  CHECK(bound_beta(r) == Rational(8, 45));
  CHECK(mbr_point(r) == TradeoffPoint{Rational(8, 15), Rational(8, 45)});
  CHECK(bound_general(r).to_string() == "alpha + 3*beta >= 16/15");
  CHECK(bound_prior(r).to_string() == "alpha + 9*beta >= 32/15");
  CHECK(bound_l1_zero(r) == bound_general(r));
  const IntersectionReport ix = intersection_check(r);
  CHECK(ix.matches_mbr);
  CHECK(ix.intersection == TradeoffPoint{Rational(8, 15), Rational(8, 45)});
}

TEST_CASE("split example with l1 = l2 = 1") {
  const NormalizedRates r = d4_split();
  CHECK(bound_beta(r) == Rational(2, 5));
  CHECK(mbr_point(r) == TradeoffPoint{Rational(8, 5), Rational(2, 5)});
  // T(4,4,2) = 3 and (T(4,4,1) + 1) * 2/5 = 7 * 2/5.
  CHECK(bound_general(r) == HalfPlane{Rational(1), Rational(3), Rational(14, 5)});
  CHECK(bound_prior(r) == HalfPlane{Rational(1), Rational(6), Rational(4)});
  CHECK(intersection_check(r).matches_mbr);
  CHECK_THROWS_AS(bound_general(NormalizedRates(4, 2, 1, {Rational(1)})), Error);
}

TEST_CASE("single-level rates put the MBR point at (d/T, 1/T)") {
  for (int d = 1; d <= 8; ++d) {
    for (int l = 0; l < d; ++l) {
      for (int j = l + 1; j <= d; ++j) {
        std::vector<Rational> rates(static_cast<std::size_t>(d - l), Rational(0));
        rates[static_cast<std::size_t>(j - l - 1)] = 1;
        const NormalizedRates r(d, l / 2, l - l / 2, rates);
        const Rational t(stripe_capacity(d, j, l));
        CHECK(mbr_point(r) == TradeoffPoint{d / t, 1 / t});
        CHECK(intersection_check(r).matches_mbr);
      }
    }
  }
}

TEST_CASE("small closed forms") {
  const NormalizedRates r(2, 0, 0, {Rational(0), Rational(1)});
  CHECK(bound_l1_zero(r).alpha_coef == Rational(1));
  CHECK(bound_l1_zero(r).beta_coef == Rational(1));
  CHECK(bound_l1_zero(r).rhs == Rational(3) * bound_beta(r));
  CHECK(bound_prior(example_rates()).beta_coef == Rational(9));
}

TEST_CASE("l1 = 0 bound equals the general bound for random rates") {
  std::mt19937 rng(13);
  for (int d = 1; d <= 9; ++d) {
    for (int l = 0; l < d; ++l) {
      for (int trial = 0; trial < 5; ++trial) {
        const NormalizedRates r(d, 0, l, random_rates(static_cast<std::size_t>(d - l), rng));
        CHECK(bound_l1_zero(r) == bound_general(r));
        const TradeoffPoint mbr = mbr_point(r);
        CHECK(bound_general(r).contains(mbr));
        CHECK(bound_prior(r).contains(mbr));
        CHECK(intersection_check(r).matches_mbr);
        CHECK(intersection_check(r).prior_tight);
      }
    }
  }
}

TEST_CASE("dominance matches a direct floor comparison") {
  CHECK(dominance(3, 0).stronger == Stronger::LowerBound);
  CHECK(dominance(3, 2).stronger == Stronger::Prior);
  CHECK(dominance(4, 2).stronger == Stronger::Tie);
  for (int d = 2; d <= 12; ++d) {
    for (int l = 1; l < d; ++l) {
      const DominanceReport rep = dominance(d, l);
      CHECK(rep.lower_bound_at_least_as_strong() == (2 * l <= d));
      CHECK(rep.lower_at_mbr == rep.prior_at_mbr);
      // Beyond the MBR beta the stronger bound has the larger floor.
      if (rep.stronger == Stronger::LowerBound) CHECK(rep.lower_at_witness > rep.prior_at_witness);
      if (rep.stronger == Stronger::Prior) CHECK(rep.lower_at_witness < rep.prior_at_witness);
      if (rep.stronger == Stronger::Tie) CHECK(rep.lower_at_witness == rep.prior_at_witness);
    }
  }
}

TEST_CASE("region export") {
  const std::vector<Rational> grid{Rational(0), Rational(8, 45), Rational(16, 45), Rational(10)};
  const auto rows = region_export(example_rates(), grid);
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].feasible);
  CHECK(rows[1].feasible);
  CHECK(rows[1].envelope == Rational(8, 15));
  CHECK(*rows[2].floor_general == Rational(16, 15) - 3 * Rational(16, 45));
  CHECK(*rows[2].floor_prior == Rational(0));
  CHECK(rows[2].envelope == Rational(16, 15) - 3 * Rational(16, 45));
  CHECK(rows[3].envelope == Rational(0));

  const auto split = region_export(d4_split(), grid);
  CHECK(split[0].floor_general.has_value());
  CHECK_FALSE(split[0].floor_prior.has_value());
  const auto out = region_export(NormalizedRates(4, 2, 1, {Rational(1)}), grid);
  CHECK_FALSE(out[0].floor_general.has_value());
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("8/45") == Rational(8, 45));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(to_string(Rational(16, 15)) == "16/15");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/"), Error);
}
