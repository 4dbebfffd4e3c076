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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "mdcsr/mdc_system.hpp"

using namespace mdcsr;

namespace {

SystemParams params(std::size_t n, std::size_t d, std::size_t l1, std::size_t l2,
                    std::map<int, std::size_t> files) {
  SystemParams p;
  p.n = n;
  p.d = d;
  p.l1 = l1;
  p.l2 = l2;
  p.file_sizes = std::move(files);
  return p;
}

LevelMessages random_messages(const System& s, std::mt19937& rng) {
  std::uniform_int_distribution<Element> dist(0, s.field().value() - 1);
  LevelMessages out;
  for (const auto& [j, code] : s.levels()) {
    auto& v = out[j];
    for (std::size_t i = 0; i < s.file_size(j); ++i) v.push_back(dist(rng));
  }
  return out;
}

std::vector<std::vector<NodeId>> subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<NodeId>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    std::vector<NodeId> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("stripe accounting examples") {
  const System a = build_system(params(4, 3, 0, 0, {{2, 15}, {3, 30}}));
  CHECK(a.stripe_plan() == std::map<int, std::size_t>{{2, 3}, {3, 5}});
  CHECK(a.alpha() == 24);
  CHECK(a.beta() == 8);
  CHECK(a.level_offsets() == std::map<int, std::size_t>{{2, 0}, {3, 9}});

  const System b = build_system(params(5, 4, 1, 1, {{3, 2}, {4, 3}}));
  CHECK(b.stripe_plan() == std::map<int, std::size_t>{{3, 1}, {4, 1}});
  CHECK(b.alpha() == 8);
  CHECK(b.beta() == 2);

  CHECK(code_of([] { build_system(params(4, 3, 0, 0, {{2, 7}})); }) == Errc::IndivisibleFileSize);
  CHECK(code_of([] { build_system(params(5, 4, 1, 1, {{2, 2}})); }) == Errc::UnknownLevel);
  CHECK(code_of([] { build_system(params(4, 4, 0, 0, {{2, 5}})); }) == Errc::BadParameters);
  CHECK(code_of([] { build_system(params(4, 3, 2, 1, {})); }) == Errc::BadParameters);
}

TEST_CASE("achieved points") {
  const AchievedPoint a = achieved_point(build_system(params(4, 3, 0, 0, {{2, 15}, {3, 30}})));
  CHECK(a.point.alpha == Rational(8, 15));
  CHECK(a.point.beta == Rational(8, 45));
  CHECK(a.rates.at(1) == Rational(0));
  CHECK(a.rates.at(2) == Rational(1, 3));
  CHECK(a.rates.at(3) == Rational(2, 3));
  const AchievedPoint b = achieved_point(build_system(params(5, 4, 1, 1, {{3, 2}, {4, 3}})));
  CHECK(b.point.alpha == Rational(8, 5));
  CHECK(b.point.beta == Rational(2, 5));
  CHECK(code_of([] { achieved_point(build_system(params(4, 3, 0, 0, {}))); }) == Errc::EmptySystem);
}

TEST_CASE("minimal file sizes") {
  const std::vector<Rational> fig{Rational(0), Rational(1, 3), Rational(2, 3)};
  const auto sizes = minimal_file_sizes(3, 0, fig);
  CHECK(sizes.at(2) == 15);
  CHECK(sizes.at(3) == 30);
  CHECK(sizes.at(1) == 0);
}

TEST_CASE("encode, recover and repair the (4,3,0,0) system") {
  std::mt19937 rng(1);
  const System s = build_system(params(4, 3, 0, 0, {{2, 15}, {3, 30}}));
  const auto msgs = random_messages(s, rng);
  const auto shares = encode_system(s, msgs, 5);
  for (const auto& share : shares) CHECK(share.flatten().size() == 24);
  CHECK(encode_system(s, msgs, 5) == shares);

  for (int level : {2, 3}) {
    for (const auto& subset : subsets(4, static_cast<std::size_t>(level))) {
      std::vector<NodeShare> chosen;
      for (NodeId i : subset) chosen.push_back(shares[i - 1]);
      CHECK(recover_file(s, level, chosen) == msgs.at(level));
    }
  }
  CHECK(code_of([&] { recover_file(s, 0, shares); }) == Errc::UnknownLevel);
  CHECK(code_of([&] { recover_file(s, 4, shares); }) == Errc::UnknownLevel);
  CHECK(code_of([&] { recover_file(s, 2, std::span(shares).first(1)); }) == Errc::WrongShareCount);

  for (NodeId target = 1; target <= 4; ++target) {
    std::vector<NodeShare> helpers;
    for (NodeId h = 1; h <= 4; ++h)
      if (h != target) helpers.push_back(shares[h - 1]);
    CHECK(repair_node(s, target, helpers) == shares[target - 1]);
    CHECK(repair_packets(s, helpers[0], target).symbol_count() == 8);
    CHECK(code_of([&] { repair_node(s, target, std::span(helpers).first(2)); }) == Errc::WrongHelperCount);
  }

  LevelMessages missing = msgs;
  missing.erase(3);
  CHECK(code_of([&] { encode_system(s, missing, 0); }) == Errc::LengthMismatch);
}

TEST_CASE("all-zero messages without keys give zero shares") {
  const System s = build_system(params(4, 3, 0, 0, {{2, 15}, {3, 30}}));
  const LevelMessages zero{{2, std::vector<Element>(15, 0)}, {3, std::vector<Element>(30, 0)}};
  const auto shares = encode_system(s, zero, 1234);
  for (const auto& share : shares) {
    const auto flat = share.flatten();
    CHECK(std::all_of(flat.begin(), flat.end(), [](Element e) { return e == 0; }));
  }
  const std::vector<NodeShare> helpers{shares[1], shares[2], shares[3]};
  CHECK(repair_node(s, 1, helpers) == shares[0]);
}

TEST_CASE("round trips and sequential repairs over many systems") {
  std::mt19937 rng(7);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t d = 2; d < n; ++d) {
      for (std::size_t l = 0; l < d; ++l) {
        std::map<int, std::size_t> files;
        for (std::size_t j = l + 1; j <= d; ++j) {
          files[static_cast<int>(j)] =
              static_cast<std::size_t>(stripe_capacity(d, j, l)) * (1 + (j % 2));
        }
        const System s = build_system(params(n, d, l / 2, l - l / 2, files));
        const auto msgs = random_messages(s, rng);
        auto shares = encode_system(s, msgs, rng());
        const auto original = shares;
        for (const auto& [j, code] : s.levels()) {
          for (const auto& subset : subsets(n, static_cast<std::size_t>(j))) {
            std::vector<NodeShare> chosen;
            for (NodeId i : subset) chosen.push_back(shares[i - 1]);
            REQUIRE(recover_file(s, j, chosen) == msgs.at(j));
          }
        }
        // Fail and rebuild every node in turn, each time from the current
        // (already repaired) shares.
        for (int round = 0; round < 2; ++round) {
          for (NodeId target = 1; target <= n; ++target) {
            std::vector<NodeId> survivors;
            for (NodeId i = 1; i <= n; ++i)
              if (i != target) survivors.push_back(i);
            std::shuffle(survivors.begin(), survivors.end(), rng);
            std::vector<NodeShare> helpers;
            for (std::size_t k = 0; k < d; ++k) helpers.push_back(shares[survivors[k] - 1]);
            shares[target - 1] = repair_node(s, target, helpers);
          }
        }
        REQUIRE(shares == original);
      }
    }
  }
}

TEST_CASE("share flattening") {
  std::mt19937 rng(3);
  const System s = build_system(params(5, 4, 1, 1, {{3, 4}, {4, 3}}));
  const auto shares = encode_system(s, random_messages(s, rng), 9);
  for (const auto& share : shares) {
    const auto flat = share.flatten();
    CHECK(flat.size() == s.alpha());
    CHECK(unflatten_share(s, share.node_id, flat) == share);
  }
  CHECK(level_seed(0, 1) == 0x9E3779B97F4A7C15ULL);
  CHECK(level_seed(5, 2) == 5 + 2 * 0x9E3779B97F4A7C15ULL);
}
