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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mdcsr/bounds.hpp"
#include "mdcsr/mbr_code.hpp"

namespace mdcsr {

struct SystemParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  std::uint32_t p = FieldModulus::kDefault;
  // Level j in [l+1, d] -> file size B_j in symbols. Missing levels are 0.
  std::map<int, std::size_t> file_sizes;

  std::size_t l() const noexcept { return l1 + l2; }
};

/// Separate-coding system: one secure MBR level code per nonempty level,
/// stored side by side on every node.
class System {
 public:
  const SystemParams& params() const noexcept { return params_; }
  const FieldModulus& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return params_.n; }
  std::size_t d() const noexcept { return params_.d; }
  std::size_t l() const noexcept { return params_.l(); }

  // Nonempty levels only, ascending.
  const std::map<int, LevelCode>& levels() const noexcept { return levels_; }
  const LevelCode& level(int j) const;
  bool has_level(int j) const { return levels_.count(j) != 0; }
  std::size_t file_size(int j) const;
  std::size_t total_file_size() const;

  // Stripe count per level (the stripe plan).
  std::map<int, std::size_t> stripe_plan() const;
  // Symbol offset of each level's segment inside a node share.
  std::map<int, std::size_t> level_offsets() const;
  std::size_t alpha() const;  // symbols stored per node
  std::size_t beta() const;   // symbols sent per helper per repair

  /// Negative-control copy with node's encoding row zeroed at every level.
  System with_zeroed_node(NodeId node) const;

 private:
  friend System build_system(const SystemParams&);
  System(SystemParams params, FieldModulus field) : params_(std::move(params)), field_(field) {}

  SystemParams params_;
  FieldModulus field_;
  std::map<int, LevelCode> levels_;
};

System build_system(const SystemParams& params);

struct NodeShare {
  NodeId node_id = 0;
  std::map<int, NodeVector> segments;  // ascending level order

  std::vector<Element> flatten() const;
  friend bool operator==(const NodeShare&, const NodeShare&) = default;
};

// Rebuilds a share from its flattened symbols using the system's layout.
NodeShare unflatten_share(const System& system, NodeId node, std::span<const Element> symbols);

struct RepairPacketBundle {
  NodeId helper = 0;
  NodeId target = 0;
  std::map<int, std::vector<RepairSymbol>> per_level;

  std::size_t symbol_count() const;
};

/// Per-level key seed: seed + j * 0x9E3779B97F4A7C15 (mod 2^64).
std::uint64_t level_seed(std::uint64_t seed, int level);

using LevelMessages = std::map<int, std::vector<Element>>;

std::vector<NodeShare> encode_system(const System& system, const LevelMessages& messages,
                                     std::uint64_t seed);
std::vector<Element> recover_file(const System& system, int level, std::span<const NodeShare> shares);
RepairPacketBundle repair_packets(const System& system, const NodeShare& helper, NodeId target);
NodeShare repair_from_packets(const System& system, NodeId target,
                              std::span<const RepairPacketBundle> bundles);
NodeShare repair_node(const System& system, NodeId target, std::span<const NodeShare> helpers);

/// Default repair group: the d lowest-indexed nodes other than target,
/// drawn from `survivors` (ascending).
std::vector<NodeId> default_helpers(const System& system, NodeId target,
                                    std::span<const NodeId> survivors);

struct AchievedPoint {
  TradeoffPoint point;
  std::map<int, Rational> rates;  // every level in [l+1, d]
};

AchievedPoint achieved_point(const System& system);
NormalizedRates normalized_rates(const System& system);

/// Smallest integer file sizes realizing the given normalized rates with
/// every level stripe-divisible.
std::map<int, std::size_t> minimal_file_sizes(int d, int l, std::span<const Rational> rates);

}  // namespace mdcsr
