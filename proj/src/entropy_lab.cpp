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

#include "mdcsr/entropy_lab.hpp"

#include <algorithm>
#include <numeric>

#include "mdcsr/bounds.hpp"

namespace mdcsr {

std::string VarId::describe() const {
  switch (kind) {
    case Kind::Stored: return "W" + std::to_string(a);
    case Kind::Repair: return "S" + std::to_string(a) + "->" + std::to_string(b);
    case Kind::Message: return "M" + std::to_string(a);
    case Kind::Key: return "K";
  }
  return "?";
}

VarCollection VarCollection::relabeled(std::span<const NodeId> perm) const {
  auto map = [&](std::size_t node) {
    if (node < 1 || node > perm.size()) throw Error(Errc::IndexOutOfRange, "node outside permutation");
    return perm[node - 1];
  };
  VarCollection out;
  for (const VarId& id : ids_) {
    switch (id.kind) {
      case VarId::Kind::Stored: out.add(VarId::stored(map(id.a))); break;
      case VarId::Kind::Repair: out.add(VarId::repair(map(id.a), map(id.b))); break;
      default: out.add(id); break;
    }
  }
  return out;
}

std::string VarCollection::describe() const {
  std::string s = "{";
  for (const VarId& id : ids_) {
    if (s.size() > 1) s += ",";
    s += id.describe();
  }
  return s + "}";
}

VarCollection operator|(const VarCollection& x, const VarCollection& y) {
  VarCollection out = x;
  for (const VarId& id : y.ids_) out.add(id);
  return out;
}

VarCollection operator&(const VarCollection& x, const VarCollection& y) {
  VarCollection out;
  for (const VarId& id : x.ids_) {
    if (y.ids_.count(id)) out.add(id);
  }
  return out;
}

CheckResult make_check(std::string name, std::vector<std::pair<std::string, long>> params,
                       Rational lhs, Rational rhs, CheckResult::Relation relation) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.relation = relation;
  r.satisfied = relation == CheckResult::Relation::Equal ? r.slack == Rational(0) : r.slack >= Rational(0);
  return r;
}

EntropyLab::EntropyLab(System system) : system_(std::move(system)), layout_(system_) {
  if (system_.n() != system_.d() + 1) {
    throw Error(Errc::NotSquareSystem, "entropy checks need n = d + 1 (n=" + std::to_string(system_.n()) +
                                           ", d=" + std::to_string(system_.d()) + ")");
  }
}

void EntropyLab::check_node(std::size_t node) const {
  if (node < 1 || node > n()) {
    throw Error(Errc::IndexOutOfRange, "node " + std::to_string(node) + " outside [1, n]");
  }
}

const FieldMatrix& EntropyLab::rows_of(const VarId& id) const {
  auto it = rows_cache_.find(id);
  if (it != rows_cache_.end()) return it->second;
  ObservationSystem obs(layout_, system_.field());
  switch (id.kind) {
    case VarId::Kind::Stored: obs = stored_observation(system_, layout_, id.a); break;
    case VarId::Kind::Repair: obs = repair_observation(system_, layout_, id.a, id.b); break;
    case VarId::Kind::Message:
      obs = message_observation(system_, layout_, static_cast<int>(id.a));
      break;
    case VarId::Kind::Key: obs = key_observation(system_, layout_); break;
  }
  return rows_cache_.emplace(id, obs.matrix()).first->second;
}

ObservationSystem EntropyLab::resolve(const VarCollection& c) const {
  ObservationSystem out(layout_, system_.field());
  for (const VarId& id : c.ids()) {
    ObservationSystem part(layout_, system_.field());
    switch (id.kind) {
      case VarId::Kind::Stored: part = stored_observation(system_, layout_, id.a); break;
      case VarId::Kind::Repair: part = repair_observation(system_, layout_, id.a, id.b); break;
      case VarId::Kind::Message:
        part = message_observation(system_, layout_, static_cast<int>(id.a));
        break;
      case VarId::Kind::Key: part = key_observation(system_, layout_); break;
    }
    out.append_all(part);
  }
  return out;
}

std::size_t EntropyLab::entropy(const VarCollection& c) const {
  std::lock_guard lock(mutex_);
  auto it = rank_cache_.find(c.ids());
  if (it != rank_cache_.end()) return it->second;
  FieldMatrix stacked(0, layout_.total(), system_.field());
  for (const VarId& id : c.ids()) {
    const FieldMatrix& rows = rows_of(id);
    for (std::size_t r = 0; r < rows.rows(); ++r) stacked.append_row(rows.row(r));
  }
  const std::size_t value = rank(stacked);
  rank_cache_.emplace(c.ids(), value);
  return value;
}

std::size_t EntropyLab::cond_entropy(const VarCollection& x, const VarCollection& given) const {
  return entropy(x | given) - entropy(given);
}

VarCollection EntropyLab::stored(std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t i = first; i <= last; ++i) {
    check_node(i);
    out.add(VarId::stored(i));
  }
  return out;
}

VarCollection EntropyLab::repair(NodeId helper, NodeId target) const {
  check_node(helper);
  check_node(target);
  if (helper == target) throw Error(Errc::IndexOutOfRange, "repair variable needs helper != target");
  return VarCollection{VarId::repair(helper, target)};
}

VarCollection EntropyLab::outbound(NodeId helper, std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t j = first; j <= last; ++j) out = out | repair(helper, j);
  return out;
}

VarCollection EntropyLab::inbound_from(std::size_t first, std::size_t last, NodeId target) const {
  VarCollection out;
  for (std::size_t i = first; i <= last; ++i) out = out | repair(i, target);
  return out;
}

VarCollection EntropyLab::inbound(std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t j = first; j <= last; ++j) {
    check_node(j);
    for (NodeId i = 1; i <= n(); ++i) {
      if (i != j) out.add(VarId::repair(i, j));
    }
  }
  return out;
}

VarCollection EntropyLab::lower_inbound(std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t j = first; j <= last; ++j) {
    check_node(j);
    if (j > 1) out = out | inbound_from(1, j - 1, j);
  }
  return out;
}

VarCollection EntropyLab::upper_inbound(std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t j = first; j <= last; ++j) {
    check_node(j);
    out = out | inbound_from(j + 1, n(), j);
  }
  return out;
}

VarCollection EntropyLab::messages(std::size_t first, std::size_t last) const {
  VarCollection out;
  for (std::size_t j = first; j <= last; ++j) {
    if (j < 1 || j > d()) throw Error(Errc::IndexOutOfRange, "message level outside [1, d]");
    out.add(VarId::message(static_cast<int>(j)));
  }
  return out;
}

VarCollection EntropyLab::U(std::size_t t, std::size_t s) const {
  if (t > s || s > n()) throw Error(Errc::IndexOutOfRange, "U(t, s) needs 0 <= t <= s <= n");
  return stored(1, t) | upper_inbound(t + 1, s);
}

namespace {

using Relation = CheckResult::Relation;
using Params = std::vector<std::pair<std::string, long>>;

long as_long(std::size_t v) { return static_cast<long>(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadRange, what);
}

Rational R(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

// Capacity sum with the signed convention sum_{t=l+1}^{k} = -sum_{t=k+1}^{l}
// when k < l, as used by the bound chains' coefficient identities.
Rational signed_capacity(std::int64_t d, std::int64_t k, std::int64_t l) {
  if (k >= l) return Rational(stripe_capacity(d, k, l));
  return -Rational(stripe_capacity(d, l, k));
}

}  // namespace

CheckResult check_lemma1(const EntropyLab& lab, std::size_t t, std::size_t s) {
  require(s >= 1 && s <= lab.n() && t + 1 <= s, "lemma1 needs s in [1, n], t in [0, s-1]");
  const VarCollection u = lab.U(t, s);
  const VarCollection extras = lab.lower_inbound(t + 1, s) | lab.stored(t + 1, s);
  CheckResult r = make_check("lemma1", {{"t", as_long(t)}, {"s", as_long(s)}}, R(lab.entropy(u)),
                             R(lab.entropy(u | extras)), Relation::Equal);
  r.detail = "H(U) = H(U, lower inbound, W)";
  return r;
}

CheckResult check_lemma1_monotone(const EntropyLab& lab, std::size_t t1, std::size_t t2, std::size_t s) {
  require(s >= 1 && s <= lab.n() && t1 <= t2 && t2 + 1 <= s,
          "monotonicity needs 0 <= t1 <= t2 <= s-1");
  return make_check("lemma1_monotone", {{"t1", as_long(t1)}, {"t2", as_long(t2)}, {"s", as_long(s)}},
                    R(lab.entropy(lab.U(t1, s))), R(lab.entropy(lab.U(t2, s))));
}

CheckResult check_exchange_I(const EntropyLab& lab, std::size_t m, std::size_t i, std::size_t ip,
                             std::size_t j) {
  const std::size_t d = lab.d();
  require(m >= 1 && m + 1 <= d, "exchange I needs m in [1, d-1]");
  require(i + 1 <= m, "exchange I needs i in [0, m-1]");
  require(ip <= i, "exchange I needs i' in [0, i]");
  require(j >= ip + 1 && j <= m - i + ip + 1, "exchange I needs j in [i'+1, m-i+i'+1]");
  const VarCollection cond = lab.message_prefix(m);
  auto h = [&](std::size_t t, std::size_t s) { return R(lab.cond_entropy(lab.U(t, s), cond)); };
  const Rational c(static_cast<std::int64_t>(d + 1 - j), static_cast<std::int64_t>(d - m));
  return make_check("exchange1",
                    {{"m", as_long(m)}, {"i", as_long(i)}, {"i_prime", as_long(ip)}, {"j", as_long(j)}},
                    c * h(i, m) + h(ip, j), c * h(i, m + 1) + h(ip, j - 1));
}

CheckResult check_coro1(const EntropyLab& lab, std::size_t j1, std::size_t j2, std::size_t i,
                        std::size_t ip) {
  const std::size_t d = lab.d();
  require(j1 >= 1 && j1 + 1 <= d, "coro1 needs j1 in [1, d-1]");
  require(i <= j1, "coro1 needs i in [0, j1]");
  require(ip <= i && ip + 1 >= i, "coro1 needs i' in [max(0, i-1), i]");
  require(j2 >= ip && j2 + 1 <= j1, "coro1 needs j2 in [i', j1-1]");
  const VarCollection cond = lab.message_prefix(j1);
  auto h = [&](std::size_t t, std::size_t s) { return R(lab.cond_entropy(lab.U(t, s), cond)); };
  const Rational c(stripe_capacity(static_cast<std::int64_t>(d), static_cast<std::int64_t>(j1),
                                   static_cast<std::int64_t>(j2)),
                   static_cast<std::int64_t>(d - j1));
  return make_check("coro1",
                    {{"j1", as_long(j1)}, {"j2", as_long(j2)}, {"i", as_long(i)}, {"i_prime", as_long(ip)}},
                    c * h(i, j1) + h(ip, j1), c * h(i, j1 + 1) + h(ip, j2));
}

CheckResult check_coro2(const EntropyLab& lab, std::size_t l, std::size_t l1, std::size_t m) {
  const auto d = static_cast<std::int64_t>(lab.d());
  require(static_cast<std::int64_t>(l) <= d - 1, "coro2 needs l in [0, d-1]");
  require(l1 <= l, "coro2 needs l1 in [0, l]");
  require(m >= l + 1 && static_cast<std::int64_t>(m) <= d - 1, "coro2 needs m in [l+1, d-1]");
  const VarCollection cond = lab.message_prefix(m);
  auto h = [&](std::size_t t, std::size_t s) { return R(lab.cond_entropy(lab.U(t, s), cond)); };
  const auto mi = static_cast<std::int64_t>(m);
  const auto li = static_cast<std::int64_t>(l);
  const Rational inv_m(1, stripe_capacity(d, mi, li));
  const Rational inv_next(1, stripe_capacity(d, mi + 1, li));
  return make_check("coro2", {{"l", as_long(l)}, {"l1", as_long(l1)}, {"m", as_long(m)}},
                    inv_m * h(l1, m), inv_next * h(l1, m + 1) + (inv_m - inv_next) * h(l1, l));
}

CheckResult check_exchange_II(const EntropyLab& lab, std::size_t l, std::size_t l1, bool conditioned) {
  const std::size_t d = lab.d();
  require(l >= 1 && l + 1 <= d, "exchange II needs l in [1, d-1]");
  require(l1 <= l / 2, "exchange II needs l1 in [0, floor(l/2)]");
  const VarCollection cond = conditioned ? lab.message_prefix(l) : VarCollection{};
  auto h = [&](const VarCollection& x) { return R(lab.cond_entropy(x, cond)); };
  const VarCollection cross = lab.outbound(l1 + 1, 1, l1);
  const Rational c(static_cast<std::int64_t>(d - l1), static_cast<std::int64_t>(d - l));
  return make_check(conditioned ? "exchange2" : "exchange2_unconditioned",
                    {{"l", as_long(l)}, {"l1", as_long(l1)}},
                    c * h(lab.U(l1, l)) + h(lab.U(l1, l1 + 1) | cross),
                    c * h(lab.U(l1, l + 1)) + h(lab.U(l1, l1) | cross));
}

namespace {

struct ChainLine {
  std::string step;  // label of the justification leading to this line
  Relation relation;
  Rational value;
};

void emit_chain(std::vector<CheckResult>& out, const std::string& name, const Rational& start,
                const std::vector<ChainLine>& lines) {
  Rational previous = start;
  long index = 1;
  for (const ChainLine& line : lines) {
    CheckResult r = make_check(name, {{"step", index++}}, previous, line.value, line.relation);
    r.detail = line.step;
    out.push_back(std::move(r));
    previous = line.value;
  }
}

}  // namespace

std::vector<CheckResult> check_props(const EntropyLab& lab) {
  const System& sys = lab.system();
  const auto d = static_cast<std::int64_t>(lab.d());
  const std::size_t l1 = sys.params().l1;
  const std::size_t l2 = sys.params().l2;
  const std::size_t l = l1 + l2;
  const auto li = static_cast<std::int64_t>(l);
  const auto l1i = static_cast<std::int64_t>(l1);
  const Rational D(d - li);
  auto T = [&](std::int64_t k, std::int64_t lo) { return signed_capacity(d, k, lo); };
  auto H = [&](const VarCollection& x) { return R(lab.entropy(x)); };
  auto Hc = [&](const VarCollection& x, const VarCollection& y) { return R(lab.cond_entropy(x, y)); };
  // sum_{j=l+1}^{m} B_j / T(d, j, l)
  auto weighted = [&](std::int64_t m) {
    Rational acc(0);
    for (std::int64_t j = li + 1; j <= m; ++j) {
      acc += R(sys.file_size(static_cast<int>(j))) / T(j, li);
    }
    return acc;
  };
  auto msgs = [&](std::size_t first, std::size_t last) { return lab.messages(first, last); };
  const Rational alpha = R(sys.alpha());
  const Rational beta = R(sys.beta());
  const Rational total_b = R(sys.total_file_size());
  const Rational sum_all = weighted(d);

  const VarCollection u0 = lab.U(l1, l);      // U^(l1, l)
  const VarCollection u1 = lab.U(l1, l + 1);  // U^(l1, l+1)
  const Rational h0 = H(u0);
  const Rational h1 = H(u1);

  std::vector<CheckResult> out;

  // prop1 family.
  for (std::int64_t m = li + 1; m <= d; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    const Rational rhs = weighted(m) + Hc(lab.U(l1, mu), msgs(l + 1, mu)) / T(m, li) +
                         (Rational(1) / D - Rational(1) / T(m, li)) * h0;
    out.push_back(make_check("prop1_EG", {{"m", static_cast<long>(m)}}, h1 / D, rhs));
  }
  {
    const VarCollection all_msgs = msgs(l + 1, lab.d());
    out.push_back(make_check("prop1_EG3", {}, Hc(lab.U(l1, lab.d()), all_msgs), Hc(u0, all_msgs)));
    out.push_back(make_check("secrecy_U", {}, Hc(u0, all_msgs), h0, Relation::Equal));
    out.push_back(make_check("prop1", {}, h1 / D, sum_all + h0 / D));
  }

  // prop2 family.
  const VarCollection cross = lab.outbound(l1 + 1, 1, l1);  // S_{l1+1 -> [1:l1]}
  for (std::size_t m = 1; m <= l1; ++m) {
    for (std::size_t k = l + 1; k <= lab.d(); ++k) {
      const Rational lhs = H(lab.outbound(l1 + 1, 1, m)) + H(u0 | lab.inbound_from(l + 2, k, l + 1));
      const Rational rhs =
          H(lab.outbound(l1 + 1, 1, m - 1)) + H(u0 | lab.inbound_from(l + 2, k + 1, l + 1));
      out.push_back(make_check("prop2_STE", {{"m", as_long(m)}, {"k", as_long(k)}}, lhs, rhs));
    }
  }
  const Rational l1_over_d = R(l1) / D;
  out.push_back(make_check("prop2", {}, H(cross) + l1_over_d * h0, l1_over_d * h1));

  // prop3 family.
  for (std::int64_t m = li + 1; m <= d - 1; ++m) {
    const auto mu = static_cast<std::size_t>(m);
    const Rational c = Rational(d - m) / D;
    out.push_back(make_check("prop3_JH", {{"m", static_cast<long>(m)}},
                             H(lab.U(l1 + 1, mu)) + c * h1,
                             (d - m) * weighted(m) + H(lab.U(l1 + 1, mu + 1)) + c * h0));
  }
  out.push_back(make_check("prop3_JH3", {}, H(lab.U(l1 + 1, lab.d())), h0 + total_b));
  out.push_back(make_check("prop3", {},
                           H(lab.U(l1 + 1, l + 1)) + T(d, li + 1) / D * h1,
                           T(d, li) * sum_all + T(d, li) / D * h0));

  // Repair-bandwidth bound, step by step, then in final form.
  {
    const Rational start = beta + h0 / D;
    emit_chain(out, "b3_chain", start,
               {{"a", Relation::AtLeast, (H(lab.upper_inbound(l + 1, l + 1)) + h0) / D},
                {"b", Relation::AtLeast, h1 / D},
                {"c", Relation::AtLeast, sum_all + h0 / D}});
    out.push_back(make_check("b3", {}, beta, sum_all));
    out.back().detail = "beta >= sum_j B_j / T(d,j,l)";
    if (total_b != Rational(0)) {
      out.push_back(make_check("b3_normalized", {}, beta / total_b, sum_all / total_b));
    }
  }

  // Storage-bandwidth bound for l1 <= l2.
  if (l1 <= l2) {
    const Rational A = T(d, l1i + 1);
    const VarCollection w_next = lab.stored(l1 + 1, l1 + 1);
    const Rational c_tail = (R(l1) + T(d, li + 1)) / D;
    const Rational start = alpha + A * beta + (R(l1) + T(d, l1i)) / D * h0;
    std::vector<ChainLine> lines;
    lines.push_back({"a", Relation::Equal,
                     alpha + A * beta +
                         (R(l1) / D + T(li, l1i + 1) / D + T(d, li + 1) / D + Rational(d - l1i) / D + 1) * h0});
    lines.push_back({"b", Relation::AtLeast,
                     T(li, l1i + 1) / D * h1 + H(lab.U(l1, l1 + 1)) + alpha + A * beta +
                         (R(l1) / D + T(d, li + 1) / D + Rational(d - l1i) / D) * h0});
    lines.push_back({"b'", Relation::Equal,
                     Rational(d - l1i) / D * h0 + H(lab.U(l1, l1 + 1) | cross) + alpha + A * beta +
                         c_tail * h0 + T(li, l1i + 1) / D * h1});
    lines.push_back({"c", Relation::AtLeast,
                     Rational(d - l1i) / D * h1 + H(lab.U(l1, l1) | cross) + alpha + A * beta +
                         c_tail * h0 + T(li, l1i + 1) / D * h1});
    lines.push_back({"d", Relation::Equal,
                     alpha + H(lab.U(l1, l1) | cross) + A * beta + c_tail * h0 + T(li, l1i) / D * h1});
    lines.push_back({"e", Relation::AtLeast,
                     H(w_next) + H(lab.U(l1, l1) | cross) + A * beta + c_tail * h0 + T(li, l1i) / D * h1});
    lines.push_back({"f", Relation::Equal,
                     H(w_next | cross) + H(lab.U(l1, l1) | cross) + A * beta + c_tail * h0 +
                         T(li, l1i) / D * h1});
    lines.push_back({"g", Relation::AtLeast,
                     H(cross) + H(lab.U(l1 + 1, l1 + 1) | cross) + A * beta + c_tail * h0 +
                         T(li, l1i) / D * h1});
    lines.push_back({"h", Relation::AtLeast,
                     H(cross) + R(l1) / D * h0 + H(lab.U(l1 + 1, l1 + 1)) + A * beta +
                         T(d, li + 1) / D * h0 + T(li, l1i) / D * h1});
    lines.push_back({"i", Relation::AtLeast,
                     R(l1) / D * h1 + H(lab.U(l1 + 1, l1 + 1)) + A * beta + T(d, li + 1) / D * h0 +
                         T(li, l1i) / D * h1});
    lines.push_back({"j", Relation::Equal,
                     H(lab.U(l1 + 1, l1 + 1)) + T(li + 1, l1i + 1) * beta + T(d, li + 1) / D * h0 +
                         T(d, li + 1) * beta + (T(li, l1i) + R(l1)) / D * h1});
    lines.push_back({"k", Relation::AtLeast,
                     H(lab.U(l1 + 1, l + 1)) + T(d, li + 1) / D * h1 + (T(li, l1i) + R(l1)) / D * h1});
    const Rational big = T(d, li) + T(li, l1i) + R(l1);
    lines.push_back({"l", Relation::AtLeast, big * sum_all + big / D * h0});
    lines.push_back({"m", Relation::Equal,
                     (T(d, l1i) + R(l1)) * sum_all + (T(d, l1i) + R(l1)) / D * h0});
    emit_chain(out, "b4_chain", start, lines);

    out.push_back(make_check("b4", {}, alpha + A * beta, (T(d, l1i) + R(l1)) * sum_all));
    out.back().detail = "alpha + T(d,d,l1+1) beta >= (T(d,d,l1) + l1) sum_j B_j / T(d,j,l)";
    if (total_b != Rational(0)) {
      out.push_back(make_check("b4_normalized", {}, (alpha + A * beta) / total_b,
                               (T(d, l1i) + R(l1)) * sum_all / total_b));
    }
  }
  return out;
}

std::vector<VarCollection> symmetry_probes(const EntropyLab& lab) {
  const std::size_t n = lab.n();
  std::vector<VarCollection> probes;
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t t = 0; t <= s; ++t) probes.push_back(lab.U(t, s));
  }
  for (std::size_t r = 1; r + 1 <= n; ++r) {
    probes.push_back(lab.inbound_from(2, r + 1, 1));  // S_{B->j}
    probes.push_back(lab.outbound(1, 2, r + 1));      // S_{i->B}
    probes.push_back(lab.stored(1, r));
    probes.push_back(lab.stored(1, r) | lab.inbound_from(r + 1, n, 1 == r + 1 ? 2 : 1));
  }
  probes.push_back(lab.repair(1, 2) | lab.repair(3, 1));
  probes.push_back(lab.lower_inbound(1, n));
  probes.push_back(lab.stored(1, 1) | lab.message_prefix(lab.d()));
  probes.push_back(lab.U(1, 2) | lab.key());
  return probes;
}

CheckResult check_symmetry(const EntropyLab& lab, std::span<const std::vector<NodeId>> perms) {
  const auto probes = symmetry_probes(lab);
  std::size_t invariant = 0;
  std::size_t total = 0;
  std::string first_violation;
  for (const auto& perm : perms) {
    if (perm.size() != lab.n()) throw Error(Errc::BadRange, "permutation size must equal n");
    for (const VarCollection& probe : probes) {
      ++total;
      const std::size_t before = lab.entropy(probe);
      const VarCollection moved = probe.relabeled(perm);
      const std::size_t after = lab.entropy(moved);
      if (before == after) {
        ++invariant;
      } else if (first_violation.empty()) {
        first_violation = probe.describe() + " -> " + moved.describe() + ": " + std::to_string(before) +
                          " vs " + std::to_string(after);
      }
    }
  }
  CheckResult r = make_check("symmetry", {{"permutations", as_long(perms.size())}}, R(invariant), R(total));
  r.detail = first_violation;
  return r;
}

std::vector<std::vector<NodeId>> all_permutations(std::size_t n) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{1});
  std::vector<std::vector<NodeId>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "lemma1") return Suite::Lemma1;
  if (name == "exchange1") return Suite::Exchange1;
  if (name == "coro") return Suite::Coro;
  if (name == "exchange2") return Suite::Exchange2;
  if (name == "props") return Suite::Props;
  if (name == "symmetry") return Suite::Symmetry;
  throw Error(Errc::Parse, "unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(const EntropyLab& lab, Suite suite) {
  const std::size_t n = lab.n();
  const std::size_t d = lab.d();
  std::vector<CheckResult> out;
  auto want = [&](Suite s) { return suite == Suite::All || suite == s; };

  if (want(Suite::Lemma1)) {
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t t = 0; t + 1 <= s; ++t) out.push_back(check_lemma1(lab, t, s));
      for (std::size_t t1 = 0; t1 + 1 <= s; ++t1) {
        for (std::size_t t2 = t1 + 1; t2 + 1 <= s; ++t2) {
          out.push_back(check_lemma1_monotone(lab, t1, t2, s));
        }
      }
    }
  }
  if (want(Suite::Exchange1)) {
    for (std::size_t m = 1; m + 1 <= d; ++m) {
      for (std::size_t i = 0; i + 1 <= m; ++i) {
        for (std::size_t ip = 0; ip <= i; ++ip) {
          for (std::size_t j = ip + 1; j <= m - i + ip + 1; ++j) {
            out.push_back(check_exchange_I(lab, m, i, ip, j));
          }
        }
      }
    }
  }
  if (want(Suite::Coro)) {
    for (std::size_t j1 = 1; j1 + 1 <= d; ++j1) {
      for (std::size_t i = 0; i <= j1; ++i) {
        for (std::size_t ip = (i == 0 ? 0 : i - 1); ip <= i; ++ip) {
          for (std::size_t j2 = ip; j2 + 1 <= j1; ++j2) out.push_back(check_coro1(lab, j1, j2, i, ip));
        }
      }
    }
    for (std::size_t l = 0; l + 1 <= d; ++l) {
      for (std::size_t l1 = 0; l1 <= l; ++l1) {
        for (std::size_t m = l + 1; m + 1 <= d; ++m) out.push_back(check_coro2(lab, l, l1, m));
      }
    }
  }
  if (want(Suite::Exchange2)) {
    for (std::size_t l = 1; l + 1 <= d; ++l) {
      for (std::size_t l1 = 0; l1 <= l / 2; ++l1) {
        out.push_back(check_exchange_II(lab, l, l1, true));
        out.push_back(check_exchange_II(lab, l, l1, false));
      }
    }
  }
  if (want(Suite::Props)) {
    auto props = check_props(lab);
    out.insert(out.end(), props.begin(), props.end());
  }
  if (want(Suite::Symmetry)) {
    const auto perms = all_permutations(n);
    out.push_back(check_symmetry(lab, perms));
  }
  return out;
}

}  // namespace mdcsr
