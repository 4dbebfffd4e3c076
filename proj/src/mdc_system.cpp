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

#include "mdcsr/mdc_system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mdcsr {

System build_system(const SystemParams& params) {
  auto bad = [](const std::string& why) { throw Error(Errc::BadParameters, why); };
  if (!(params.l() < params.d)) bad("l1 + l2 < d violated");
  if (!(params.d < params.n)) bad("d < n violated");
  FieldModulus field(params.p);
  if (!(params.n + 1 <= params.p)) bad("p >= n + 1 violated");

  System system(params, field);
  const int l = static_cast<int>(params.l());
  const int d = static_cast<int>(params.d);
  for (const auto& [level, size] : params.file_sizes) {
    if (level <= l || level > d) {
      throw Error(Errc::UnknownLevel, "level " + std::to_string(level) + " outside [" +
                                          std::to_string(l + 1) + ", " + std::to_string(d) + "]");
    }
    if (size == 0) continue;
    const auto capacity = static_cast<std::size_t>(stripe_capacity(d, level, l));
    if (size % capacity != 0) {
      throw Error(Errc::IndivisibleFileSize,
                  "level " + std::to_string(level) + ": size " + std::to_string(size) +
                      " is not a multiple of the stripe capacity " + std::to_string(capacity));
    }
    system.levels_.emplace(level, build_level_code(params.n, static_cast<std::size_t>(level),
                                                   params.d, params.l(), field, size / capacity));
  }
  return system;
}

const LevelCode& System::level(int j) const {
  auto it = levels_.find(j);
  if (it == levels_.end()) throw Error(Errc::UnknownLevel, "level " + std::to_string(j) + " is empty");
  return it->second;
}

std::size_t System::file_size(int j) const {
  auto it = params_.file_sizes.find(j);
  return it == params_.file_sizes.end() ? 0 : it->second;
}

std::size_t System::total_file_size() const {
  std::size_t total = 0;
  for (const auto& [level, size] : params_.file_sizes) total += size;
  return total;
}

std::map<int, std::size_t> System::stripe_plan() const {
  std::map<int, std::size_t> plan;
  for (const auto& [j, code] : levels_) plan[j] = code.stripes();
  return plan;
}

std::map<int, std::size_t> System::level_offsets() const {
  std::map<int, std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& [j, code] : levels_) {
    offsets[j] = offset;
    offset += code.symbols_per_node();
  }
  return offsets;
}

std::size_t System::alpha() const {
  std::size_t total = 0;
  for (const auto& [j, code] : levels_) total += code.symbols_per_node();
  return total;
}

std::size_t System::beta() const {
  std::size_t total = 0;
  for (const auto& [j, code] : levels_) total += code.stripes();
  return total;
}

System System::with_zeroed_node(NodeId node) const {
  System copy = *this;
  for (auto& [j, code] : copy.levels_) code = code.with_zeroed_row(node);
  return copy;
}

std::vector<Element> NodeShare::flatten() const {
  std::vector<Element> out;
  for (const auto& [j, seg] : segments) out.insert(out.end(), seg.symbols.begin(), seg.symbols.end());
  return out;
}

NodeShare unflatten_share(const System& system, NodeId node, std::span<const Element> symbols) {
  if (symbols.size() != system.alpha()) {
    throw Error(Errc::LengthMismatch, "share holds " + std::to_string(symbols.size()) +
                                          " symbols, expected " + std::to_string(system.alpha()));
  }
  NodeShare share{node, {}};
  std::size_t offset = 0;
  for (const auto& [j, code] : system.levels()) {
    auto first = symbols.begin() + static_cast<std::ptrdiff_t>(offset);
    share.segments[j] = {node, {first, first + static_cast<std::ptrdiff_t>(code.symbols_per_node())}};
    offset += code.symbols_per_node();
  }
  return share;
}

std::size_t RepairPacketBundle::symbol_count() const {
  std::size_t total = 0;
  for (const auto& [j, pkts] : per_level) total += pkts.size();
  return total;
}

std::uint64_t level_seed(std::uint64_t seed, int level) {
  return seed + static_cast<std::uint64_t>(level) * 0x9E3779B97F4A7C15ULL;
}

std::vector<NodeShare> encode_system(const System& system, const LevelMessages& messages,
                                     std::uint64_t seed) {
  const int l = static_cast<int>(system.l());
  for (const auto& [j, msg] : messages) {
    if (j <= l || j > static_cast<int>(system.d())) {
      throw Error(Errc::UnknownLevel, "message for level " + std::to_string(j) + " has no code");
    }
    if (!system.has_level(j) && !msg.empty()) {
      throw Error(Errc::LengthMismatch, "level " + std::to_string(j) + " has size 0");
    }
  }
  std::vector<NodeShare> shares(system.n());
  for (NodeId i = 1; i <= system.n(); ++i) shares[i - 1].node_id = i;
  for (const auto& [j, code] : system.levels()) {
    auto it = messages.find(j);
    if (it == messages.end()) {
      throw Error(Errc::LengthMismatch, "missing message for level " + std::to_string(j));
    }
    if (it->second.size() != system.file_size(j)) {
      throw Error(Errc::LengthMismatch, "level " + std::to_string(j) + " message has " +
                                            std::to_string(it->second.size()) + " symbols, expected " +
                                            std::to_string(system.file_size(j)));
    }
    auto vectors = encode_level(code, it->second, level_seed(seed, j));
    for (NodeVector& v : vectors) shares[v.node_id - 1].segments[j] = std::move(v);
  }
  return shares;
}

std::vector<Element> recover_file(const System& system, int level, std::span<const NodeShare> shares) {
  if (level <= static_cast<int>(system.l()) || level > static_cast<int>(system.d())) {
    throw Error(Errc::UnknownLevel, "level " + std::to_string(level) + " outside [l+1, d]");
  }
  std::vector<NodeId> ids;
  for (const NodeShare& s : shares) {
    if (std::find(ids.begin(), ids.end(), s.node_id) != ids.end()) {
      throw Error(Errc::WrongShareCount, "duplicate share for node " + std::to_string(s.node_id));
    }
    ids.push_back(s.node_id);
  }
  if (ids.size() != static_cast<std::size_t>(level)) {
    throw Error(Errc::WrongShareCount, "level " + std::to_string(level) + " needs exactly " +
                                           std::to_string(level) + " shares, got " +
                                           std::to_string(ids.size()));
  }
  if (!system.has_level(level)) return {};
  std::vector<NodeVector> segments;
  for (const NodeShare& s : shares) {
    auto it = s.segments.find(level);
    if (it == s.segments.end()) throw Error(Errc::LengthMismatch, "share lacks the level segment");
    segments.push_back(it->second);
  }
  return collect_level(system.level(level), segments);
}

RepairPacketBundle repair_packets(const System& system, const NodeShare& helper, NodeId target) {
  RepairPacketBundle bundle{helper.node_id, target, {}};
  for (const auto& [j, code] : system.levels()) {
    auto it = helper.segments.find(j);
    if (it == helper.segments.end()) throw Error(Errc::LengthMismatch, "helper lacks a level segment");
    bundle.per_level[j] = repair_symbol(code, it->second, target);
  }
  return bundle;
}

NodeShare repair_from_packets(const System& system, NodeId target,
                              std::span<const RepairPacketBundle> bundles) {
  std::vector<NodeId> helpers;
  for (const auto& b : bundles) {
    if (b.helper == target) throw Error(Errc::SelfRepair, "target listed as its own helper");
    if (std::find(helpers.begin(), helpers.end(), b.helper) != helpers.end()) {
      throw Error(Errc::WrongHelperCount, "helper " + std::to_string(b.helper) + " listed twice");
    }
    helpers.push_back(b.helper);
  }
  if (helpers.size() != system.d()) {
    throw Error(Errc::WrongHelperCount, "repair needs exactly " + std::to_string(system.d()) +
                                            " helpers, got " + std::to_string(helpers.size()));
  }
  NodeShare out{target, {}};
  for (const auto& [j, code] : system.levels()) {
    std::vector<RepairSymbol> packets;
    for (const auto& b : bundles) {
      auto it = b.per_level.find(j);
      if (it == b.per_level.end()) throw Error(Errc::LengthMismatch, "bundle lacks a level");
      packets.insert(packets.end(), it->second.begin(), it->second.end());
    }
    out.segments[j] = regenerate_node(code, packets, target);
  }
  return out;
}

NodeShare repair_node(const System& system, NodeId target, std::span<const NodeShare> helpers) {
  if (target < 1 || target > system.n()) throw Error(Errc::IndexOutOfRange, "target out of range");
  if (helpers.size() != system.d()) {
    throw Error(Errc::WrongHelperCount, "repair needs exactly " + std::to_string(system.d()) +
                                            " helpers, got " + std::to_string(helpers.size()));
  }
  std::vector<RepairPacketBundle> bundles;
  for (const NodeShare& h : helpers) {
    if (h.node_id == target) throw Error(Errc::SelfRepair, "target listed as its own helper");
    bundles.push_back(repair_packets(system, h, target));
  }
  return repair_from_packets(system, target, bundles);
}

std::vector<NodeId> default_helpers(const System& system, NodeId target,
                                    std::span<const NodeId> survivors) {
  std::vector<NodeId> sorted(survivors.begin(), survivors.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<NodeId> group;
  for (NodeId id : sorted) {
    if (id != target && group.size() < system.d()) group.push_back(id);
  }
  if (group.size() != system.d()) {
    throw Error(Errc::WrongHelperCount, "fewer than d survivors available");
  }
  return group;
}

AchievedPoint achieved_point(const System& system) {
  const std::size_t total = system.total_file_size();
  if (total == 0) throw Error(Errc::EmptySystem, "all file sizes are zero");
  const auto denom = static_cast<std::int64_t>(total);
  AchievedPoint out;
  out.point.alpha = Rational(static_cast<std::int64_t>(system.alpha()), denom);
  out.point.beta = Rational(static_cast<std::int64_t>(system.beta()), denom);
  for (int j = static_cast<int>(system.l()) + 1; j <= static_cast<int>(system.d()); ++j) {
    out.rates[j] = Rational(static_cast<std::int64_t>(system.file_size(j)), denom);
  }
  return out;
}

NormalizedRates normalized_rates(const System& system) {
  const AchievedPoint ap = achieved_point(system);
  std::vector<Rational> rates;
  for (const auto& [j, r] : ap.rates) rates.push_back(r);
  return NormalizedRates(static_cast<int>(system.d()), static_cast<int>(system.params().l1),
                         static_cast<int>(system.params().l2), std::move(rates));
}

std::map<int, std::size_t> minimal_file_sizes(int d, int l, std::span<const Rational> rates) {
  if (l < 0 || l >= d || static_cast<int>(rates.size()) != d - l) {
    throw Error(Errc::InvalidRates, "expected one rate per level in [l+1, d]");
  }
  std::int64_t scale = 1;
  for (int j = l + 1; j <= d; ++j) {
    const Rational per_stripe = rates[static_cast<std::size_t>(j - l - 1)] / stripe_capacity(d, j, l);
    if (per_stripe < Rational(0)) throw Error(Errc::InvalidRates, "negative rate");
    scale = std::lcm(scale, per_stripe.denominator());
  }
  std::map<int, std::size_t> sizes;
  for (int j = l + 1; j <= d; ++j) {
    const Rational size = rates[static_cast<std::size_t>(j - l - 1)] * scale;
    sizes[j] = static_cast<std::size_t>(size.numerator());
  }
  return sizes;
}

}  // namespace mdcsr
