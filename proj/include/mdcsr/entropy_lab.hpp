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

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdcsr/rational.hpp"
#include "mdcsr/secrecy_audit.hpp"

namespace mdcsr {

/// One system variable: a node's stored content, one repair download, one
/// level's message, or the whole key.
struct VarId {
  enum class Kind { Stored, Repair, Message, Key };
  Kind kind = Kind::Stored;
  std::size_t a = 0;  // stored: node; repair: helper; message: level
  std::size_t b = 0;  // repair: target

  static VarId stored(NodeId node) { return {Kind::Stored, node, 0}; }
  static VarId repair(NodeId helper, NodeId target) { return {Kind::Repair, helper, target}; }
  static VarId message(int level) { return {Kind::Message, static_cast<std::size_t>(level), 0}; }
  static VarId key() { return {Kind::Key, 0, 0}; }

  std::string describe() const;
  auto operator<=>(const VarId&) const = default;
};

/// A set of variables; duplicates collapse.
class VarCollection {
 public:
  VarCollection() = default;
  VarCollection(std::initializer_list<VarId> ids) : ids_(ids) {}

  const std::set<VarId>& ids() const noexcept { return ids_; }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  VarCollection& add(VarId id) {
    ids_.insert(id);
    return *this;
  }

  /// Relabels node i as perm[i - 1] in stored and repair variables.
  VarCollection relabeled(std::span<const NodeId> perm) const;
  std::string describe() const;

  friend VarCollection operator|(const VarCollection& x, const VarCollection& y);
  friend VarCollection operator&(const VarCollection& x, const VarCollection& y);
  friend bool operator==(const VarCollection&, const VarCollection&) = default;

 private:
  std::set<VarId> ids_;
};

/// Outcome of one instantiated inequality lhs >= rhs (or lhs = rhs for
/// equality steps), entropies in symbols.
struct CheckResult {
  enum class Relation { AtLeast, Equal };

  std::string name;
  std::vector<std::pair<std::string, long>> params;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool satisfied = false;
  Relation relation = Relation::AtLeast;
  std::string detail;
};

CheckResult make_check(std::string name, std::vector<std::pair<std::string, long>> params,
                       Rational lhs, Rational rhs,
                       CheckResult::Relation relation = CheckResult::Relation::AtLeast);

/// Entropy calculator over an instantiated n = d + 1 system. For linear
/// codes with uniform independent messages and keys, the joint entropy of a
/// collection (in units of log p) is the rank of its stacked functionals.
class EntropyLab {
 public:
  // Throws NotSquareSystem unless n = d + 1.
  explicit EntropyLab(System system);

  const System& system() const noexcept { return system_; }
  std::size_t n() const noexcept { return system_.n(); }
  std::size_t d() const noexcept { return system_.d(); }

  ObservationSystem resolve(const VarCollection& c) const;
  std::size_t entropy(const VarCollection& c) const;
  std::size_t cond_entropy(const VarCollection& x, const VarCollection& given) const;

  // Collection families. Ranges are inclusive and empty when first > last.
  VarCollection stored(std::size_t first, std::size_t last) const;             // W_[first:last]
  VarCollection repair(NodeId helper, NodeId target) const;                    // S_{helper->target}
  VarCollection outbound(NodeId helper, std::size_t first, std::size_t last) const;  // S_{helper->[first:last]}
  VarCollection inbound_from(std::size_t first, std::size_t last, NodeId target) const;  // S_{[first:last]->target}
  VarCollection inbound(std::size_t first, std::size_t last) const;        // S_{->[first:last]}
  VarCollection lower_inbound(std::size_t first, std::size_t last) const;  // from lower-indexed helpers
  VarCollection upper_inbound(std::size_t first, std::size_t last) const;  // from higher-indexed helpers
  VarCollection messages(std::size_t first, std::size_t last) const;       // M_[first:last]
  VarCollection message_prefix(std::size_t m) const { return messages(1, m); }
  VarCollection key() const { return VarCollection{VarId::key()}; }
  /// (W_[1:t], upper_inbound(t+1, s)); requires 0 <= t <= s <= n.
  VarCollection U(std::size_t t, std::size_t s) const;

 private:
  void check_node(std::size_t node) const;
  const FieldMatrix& rows_of(const VarId& id) const;

  System system_;
  ColumnLayout layout_;
  mutable std::mutex mutex_;
  mutable std::map<VarId, FieldMatrix> rows_cache_;
  mutable std::map<std::set<VarId>, std::size_t> rank_cache_;
};

// Each check throws BadRange outside the parameter range of the inequality.
CheckResult check_lemma1(const EntropyLab& lab, std::size_t t, std::size_t s);
CheckResult check_lemma1_monotone(const EntropyLab& lab, std::size_t t1, std::size_t t2, std::size_t s);
CheckResult check_exchange_I(const EntropyLab& lab, std::size_t m, std::size_t i, std::size_t i_prime,
                             std::size_t j);
CheckResult check_coro1(const EntropyLab& lab, std::size_t j1, std::size_t j2, std::size_t i,
                        std::size_t i_prime);
CheckResult check_coro2(const EntropyLab& lab, std::size_t l, std::size_t l1, std::size_t m);
/// With `conditioned`, every term is conditioned on the messages of levels
/// 1..l; for systems whose levels 1..l are empty both forms coincide.
CheckResult check_exchange_II(const EntropyLab& lab, std::size_t l, std::size_t l1, bool conditioned);

/// Intermediate and final inequalities leading to the two outer bounds,
/// instantiated with the system's own (l1, l2), file sizes, alpha and beta.
std::vector<CheckResult> check_props(const EntropyLab& lab);

/// Representative collections whose entropies a symmetrical code must keep
/// under node relabeling.
std::vector<VarCollection> symmetry_probes(const EntropyLab& lab);
/// lhs counts invariant (probe, permutation) pairs, rhs counts all pairs.
CheckResult check_symmetry(const EntropyLab& lab, std::span<const std::vector<NodeId>> perms);
std::vector<std::vector<NodeId>> all_permutations(std::size_t n);

enum class Suite { All, Lemma1, Exchange1, Coro, Exchange2, Props, Symmetry };

// Throws Parse for unknown names.
Suite parse_suite(std::string_view name);
std::vector<CheckResult> run_suite(const EntropyLab& lab, Suite suite);

}  // namespace mdcsr
