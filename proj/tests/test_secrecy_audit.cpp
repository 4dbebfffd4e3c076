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

#include <set>

#include "doctest.h"
#include "mdcsr/secrecy_audit.hpp"

using namespace mdcsr;

namespace {

System make(std::size_t n, std::size_t d, std::size_t l1, std::size_t l2, std::map<int, std::size_t> files,
            std::uint32_t p = 257) {
  SystemParams sp;
  sp.n = n;
  sp.d = d;
  sp.l1 = l1;
  sp.l2 = l2;
  sp.p = p;
  sp.file_sizes = std::move(files);
  return build_system(sp);
}

// Perfect secrecy by enumeration: the set of observations reachable over
// all keys must be the same for every message.
bool secure_by_enumeration(const ObservationSystem& obs) {
  const FieldMatrix& m = obs.matrix();
  const Element p = m.field().value();
  const std::size_t mc = obs.message_columns();
  const std::size_t kc = obs.key_columns();
  auto count = [&](std::size_t cols) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < cols; ++i) c *= p;
    return c;
  };
  auto digits = [&](std::size_t idx, std::size_t cols) {
    std::vector<Element> out(cols);
    for (auto& e : out) {
      e = static_cast<Element>(idx % p);
      idx /= p;
    }
    return out;
  };
  std::set<std::vector<Element>> reference;
  for (std::size_t mi = 0; mi < count(mc); ++mi) {
    const auto msg = digits(mi, mc);
    std::set<std::vector<Element>> seen;
    for (std::size_t ki = 0; ki < count(kc); ++ki) {
      const auto key = digits(ki, kc);
      std::vector<Element> y(m.rows(), 0);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < mc; ++c) acc += std::uint64_t{m.at(r, c)} * msg[c];
        for (std::size_t c = 0; c < kc; ++c) acc += std::uint64_t{m.at(r, mc + c)} * key[c];
        y[r] = static_cast<Element>(acc % p);
      }
      seen.insert(y);
    }
    if (mi == 0) {
      reference = std::move(seen);
    } else if (seen != reference) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("column layout") {
  const System s = make(5, 4, 1, 1, {{3, 2}, {4, 3}});
  const ColumnLayout layout(s);
  CHECK(layout.message_columns() == 5);
  // Key cells per stripe: T(4,k,0) - T(4,k,2) = 7 for k=3 and 7 for k=4.
  CHECK(layout.key_columns() == 14);
  CHECK(layout.message_range(3).begin == 0);
  CHECK(layout.message_range(3).end == 2);
  CHECK(layout.message_range(4).end == 5);
  CHECK(layout.key_range(3).begin == 5);
}

TEST_CASE("observation row counts") {
  const System s = make(5, 4, 1, 1, {{3, 2}, {4, 3}});
  const ObservationSystem empty = observation_of(s, {});
  CHECK(empty.row_count() == 0);
  CHECK(leakage(empty).secure());

  const ObservationSystem obs = observation_of(s, {{1}, {2}});
  std::size_t stored = 0, repair = 0;
  for (const RowTag& t : obs.tags()) {
    if (t.kind == RowTag::Kind::Stored) ++stored;
    if (t.kind == RowTag::Kind::Repair) ++repair;
  }
  CHECK(stored == 8);
  CHECK(repair == 8);  // 4 helpers x 2 levels x 1 stripe
  CHECK_THROWS_AS(observation_of(s, {{1}, {1}}), Error);
}

TEST_CASE("compliant eavesdroppers learn nothing") {
  const System s = make(5, 4, 1, 1, {{3, 2}, {4, 3}});
  const AuditSummary all = audit_all(s);
  CHECK(all.entries.size() == 20);
  CHECK(all.secure());
  for (const auto& e : all.entries) CHECK(e.compliant);
  CHECK(audit_all(s, std::pair<std::size_t, std::size_t>{0, 2}).secure());
  CHECK(audit_all(s, std::pair<std::size_t, std::size_t>{2, 0}).secure());

  const AuditSummary over = audit_all(s, std::pair<std::size_t, std::size_t>{1, 2});
  CHECK_FALSE(over.secure());
  for (const auto& e : over.entries) CHECK_FALSE(e.compliant);

  const ObservationSystem obs = observation_of(s, {{1}, {2}});
  CHECK(leakage(obs.reclassify_keys_as_messages()).leakage_rank > 0);
  for (const auto& [j, r] : leakage_by_level(obs)) CHECK(r.secure());
}

TEST_CASE("unkeyed system is trivially secure against nobody") {
  const System s = make(4, 3, 0, 0, {{2, 15}, {3, 30}});
  const AuditSummary all = audit_all(s);
  CHECK(all.entries.size() == 1);
  CHECK(all.secure());
  CHECK_FALSE(leakage(observation_of(s, {{1}, {}})).secure());
}

TEST_CASE("rank leakage agrees with enumeration on tiny systems") {
  const System s = make(3, 2, 0, 1, {{2, 1}}, 5);
  for (const EavesdropperSpec& spec :
       std::vector<EavesdropperSpec>{{{}, {}}, {{1}, {}}, {{}, {2}}, {{1}, {2}}, {{}, {1, 3}}, {{2, 3}, {}}}) {
    const ObservationSystem obs = observation_of(s, spec);
    CHECK(leakage(obs).secure() == secure_by_enumeration(obs));
  }
  CHECK(leakage(observation_of(s, {{}, {2}})).secure());
  CHECK_FALSE(leakage(observation_of(s, {{1, 2}, {}})).secure());

  const System t = make(4, 3, 1, 0, {{2, 2}}, 5);
  for (NodeId i = 1; i <= 4; ++i) {
    const ObservationSystem one = observation_of(t, {{i}, {}});
    CHECK(leakage(one).secure());
    CHECK(secure_by_enumeration(one));
  }
}

TEST_CASE("type I and type II views have equal rank at the MBR point") {
  const System s = make(5, 4, 1, 1, {{3, 2}, {4, 3}});
  for (NodeId i = 1; i <= 5; ++i) {
    const TypeSplitRanks r = type_split_ranks(s, i);
    CHECK(r.type1_rank == s.alpha());
    CHECK(r.type2_rank == s.alpha());
    CHECK(r.joint_rank == s.alpha());
  }
}
