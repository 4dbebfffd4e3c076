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

#include "mdcsr/secrecy_audit.hpp"

#include <algorithm>
#include <functional>

namespace mdcsr {

namespace {

// Every k-subset of `pool`, lexicographic.
std::vector<std::vector<NodeId>> combinations(const std::vector<NodeId>& pool, std::size_t k) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

void check_node(const System& system, NodeId node) {
  if (node < 1 || node > system.n()) {
    throw Error(Errc::IndexOutOfRange, "node id " + std::to_string(node) + " outside [1, n]");
  }
}

}  // namespace

ColumnLayout::ColumnLayout(const System& system) {
  for (const auto& [j, code] : system.levels()) {
    const std::size_t width = code.message_count() * code.stripes();
    message_ranges_[j] = {message_columns_, message_columns_ + width};
    message_columns_ += width;
  }
  for (const auto& [j, code] : system.levels()) {
    const std::size_t width = code.key_count() * code.stripes();
    key_ranges_[j] = {message_columns_ + key_columns_, message_columns_ + key_columns_ + width};
    key_columns_ += width;
  }
}

ColumnLayout::Range ColumnLayout::message_range(int level) const {
  auto it = message_ranges_.find(level);
  return it == message_ranges_.end() ? Range{} : it->second;
}

ColumnLayout::Range ColumnLayout::key_range(int level) const {
  auto it = key_ranges_.find(level);
  return it == key_ranges_.end() ? Range{} : it->second;
}

std::vector<Element> ColumnLayout::lift(const LevelCode& code, int level, std::size_t stripe,
                                        std::span<const Element> cell_coeffs) const {
  std::vector<Element> row(total(), 0);
  const auto& layout = code.layout();
  const std::size_t msg_base = message_range(level).begin + stripe * code.message_count();
  const std::size_t key_base = key_range(level).begin + stripe * code.key_count();
  for (std::size_t c = 0; c < layout.message_cells().size(); ++c) {
    row[msg_base + c] = cell_coeffs[layout.message_cells()[c]];
  }
  for (std::size_t c = 0; c < layout.key_cells().size(); ++c) {
    row[key_base + c] = cell_coeffs[layout.key_cells()[c]];
  }
  return row;
}

std::string RowTag::describe() const {
  switch (kind) {
    case Kind::Stored:
      return "W" + std::to_string(from) + "[L" + std::to_string(level) + ",s" + std::to_string(stripe) +
             "," + std::to_string(index) + "]";
    case Kind::Repair:
      return "S" + std::to_string(from) + "->" + std::to_string(to) + "[L" + std::to_string(level) +
             ",s" + std::to_string(stripe) + ",g" + std::to_string(group) + "]";
    case Kind::Message:
      return "M" + std::to_string(level) + "[" + std::to_string(index) + "]";
    case Kind::Key:
      return "K[" + std::to_string(index) + "]";
  }
  return "?";
}

ObservationSystem::ObservationSystem(std::size_t message_columns, std::size_t key_columns,
                                     FieldModulus field,
                                     std::map<int, ColumnLayout::Range> message_ranges,
                                     std::map<int, ColumnLayout::Range> key_ranges)
    : message_columns_(message_columns),
      matrix_(0, message_columns + key_columns, field),
      message_ranges_(std::move(message_ranges)),
      key_ranges_(std::move(key_ranges)) {}

ObservationSystem::ObservationSystem(const ColumnLayout& layout, FieldModulus field)
    : ObservationSystem(layout.message_columns(), layout.key_columns(), field,
                        layout.message_ranges(), layout.key_ranges()) {}

void ObservationSystem::append(std::span<const Element> row, RowTag tag) {
  matrix_.append_row(row);
  tags_.push_back(tag);
}

void ObservationSystem::append_all(const ObservationSystem& other) {
  if (other.matrix_.cols() != matrix_.cols() || other.message_columns_ != message_columns_) {
    throw Error(Errc::DimensionMismatch, "observation column layouts differ");
  }
  for (std::size_t r = 0; r < other.row_count(); ++r) append(other.matrix_.row(r), other.tags_[r]);
}

ObservationSystem ObservationSystem::reclassify_keys_as_messages() const {
  ObservationSystem out(matrix_.cols(), 0, matrix_.field());
  for (std::size_t r = 0; r < row_count(); ++r) out.append(matrix_.row(r), tags_[r]);
  return out;
}

ObservationSystem ObservationSystem::restrict_to_level(int level) const {
  auto pick = [](const std::map<int, ColumnLayout::Range>& m, int j) {
    auto it = m.find(j);
    return it == m.end() ? ColumnLayout::Range{} : it->second;
  };
  const auto msg = pick(message_ranges_, level);
  const auto key = pick(key_ranges_, level);
  const std::size_t msg_width = msg.end - msg.begin;
  const std::size_t key_width = key.end - key.begin;
  ObservationSystem out(msg_width, key_width, matrix_.field());
  std::vector<Element> row(msg_width + key_width);
  for (std::size_t r = 0; r < row_count(); ++r) {
    const auto src = matrix_.row(r);
    std::copy(src.begin() + static_cast<std::ptrdiff_t>(msg.begin),
              src.begin() + static_cast<std::ptrdiff_t>(msg.end), row.begin());
    std::copy(src.begin() + static_cast<std::ptrdiff_t>(key.begin),
              src.begin() + static_cast<std::ptrdiff_t>(key.end),
              row.begin() + static_cast<std::ptrdiff_t>(msg_width));
    out.append(row, tags_[r]);
  }
  return out;
}

ObservationSystem stored_observation(const System& system, const ColumnLayout& layout, NodeId node) {
  check_node(system, node);
  ObservationSystem obs(layout, system.field());
  for (const auto& [j, code] : system.levels()) {
    const FieldMatrix coeffs = code.stored_functionals(node);
    for (std::size_t s = 0; s < code.stripes(); ++s) {
      for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        RowTag tag{RowTag::Kind::Stored, node, 0, j, s, r, 0};
        obs.append(layout.lift(code, j, s, coeffs.row(r)), tag);
      }
    }
  }
  return obs;
}

namespace {

void append_repair_rows(ObservationSystem& obs, const System& system, const ColumnLayout& layout,
                        NodeId helper, NodeId target, std::size_t group) {
  for (const auto& [j, code] : system.levels()) {
    const auto coeffs = code.repair_functional(helper, target);
    for (std::size_t s = 0; s < code.stripes(); ++s) {
      RowTag tag{RowTag::Kind::Repair, helper, target, j, s, 0, group};
      obs.append(layout.lift(code, j, s, coeffs), tag);
    }
  }
}

}  // namespace

ObservationSystem repair_observation(const System& system, const ColumnLayout& layout, NodeId helper,
                                     NodeId target) {
  check_node(system, helper);
  check_node(system, target);
  if (helper == target) throw Error(Errc::SelfRepair, "helper and target coincide");
  ObservationSystem obs(layout, system.field());
  append_repair_rows(obs, system, layout, helper, target, 0);
  return obs;
}

ObservationSystem inbound_observation(const System& system, const ColumnLayout& layout, NodeId target) {
  check_node(system, target);
  std::vector<NodeId> others;
  for (NodeId i = 1; i <= system.n(); ++i) {
    if (i != target) others.push_back(i);
  }
  ObservationSystem obs(layout, system.field());
  std::size_t group = 0;
  for (const auto& members : combinations(others, system.d())) {
    for (NodeId helper : members) append_repair_rows(obs, system, layout, helper, target, group);
    ++group;
  }
  return obs;
}

ObservationSystem message_observation(const System& system, const ColumnLayout& layout, int level) {
  ObservationSystem obs(layout, system.field());
  const auto range = layout.message_range(level);
  std::vector<Element> row(layout.total(), 0);
  for (std::size_t c = range.begin; c < range.end; ++c) {
    row[c] = 1;
    obs.append(row, RowTag{RowTag::Kind::Message, 0, 0, level, 0, c, 0});
    row[c] = 0;
  }
  return obs;
}

ObservationSystem key_observation(const System& system, const ColumnLayout& layout) {
  ObservationSystem obs(layout, system.field());
  std::vector<Element> row(layout.total(), 0);
  for (std::size_t c = layout.message_columns(); c < layout.total(); ++c) {
    row[c] = 1;
    obs.append(row, RowTag{RowTag::Kind::Key, 0, 0, 0, 0, c, 0});
    row[c] = 0;
  }
  return obs;
}

ObservationSystem observation_of(const System& system, const EavesdropperSpec& spec) {
  for (NodeId i : spec.type1) {
    if (spec.type2.count(i)) {
      throw Error(Errc::OverlappingSets, "node " + std::to_string(i) + " is in both E1 and E2");
    }
  }
  const ColumnLayout layout(system);
  ObservationSystem obs(layout, system.field());
  for (NodeId i : spec.type1) obs.append_all(stored_observation(system, layout, i));
  for (NodeId i : spec.type2) obs.append_all(inbound_observation(system, layout, i));
  return obs;
}

LeakageReport leakage(const ObservationSystem& obs) {
  LeakageReport report;
  report.h_obs = rank(obs.matrix());
  report.h_obs_given_messages = rank(obs.matrix().col_range(obs.message_columns(), obs.key_columns()));
  report.leakage_rank = report.h_obs - report.h_obs_given_messages;
  return report;
}

std::map<int, LeakageReport> leakage_by_level(const ObservationSystem& obs) {
  std::map<int, LeakageReport> out;
  for (const auto& [j, range] : obs.message_ranges()) out[j] = leakage(obs.restrict_to_level(j));
  return out;
}

bool AuditSummary::secure() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const AuditEntry& e) { return e.report.secure(); });
}

AuditSummary audit_all(const System& system, std::optional<std::pair<std::size_t, std::size_t>> sizes) {
  const auto [a, b] = sizes.value_or(std::pair{system.params().l1, system.params().l2});
  AuditSummary summary;
  summary.type1_count = a;
  summary.type2_count = b;
  if (a + b > system.n()) throw Error(Errc::BadRange, "more eavesdropped nodes than nodes");
  std::vector<NodeId> all;
  for (NodeId i = 1; i <= system.n(); ++i) all.push_back(i);
  const bool compliant = a == system.params().l1 && b == system.params().l2;
  for (const auto& e1 : combinations(all, a)) {
    std::vector<NodeId> rest;
    for (NodeId i : all) {
      if (std::find(e1.begin(), e1.end(), i) == e1.end()) rest.push_back(i);
    }
    for (const auto& e2 : combinations(rest, b)) {
      AuditEntry entry;
      entry.spec.type1 = {e1.begin(), e1.end()};
      entry.spec.type2 = {e2.begin(), e2.end()};
      entry.compliant = compliant;
      entry.report = leakage(observation_of(system, entry.spec));
      summary.entries.push_back(std::move(entry));
    }
  }
  return summary;
}

TypeSplitRanks type_split_ranks(const System& system, NodeId node) {
  const ColumnLayout layout(system);
  const ObservationSystem type1 = stored_observation(system, layout, node);
  const ObservationSystem type2 = inbound_observation(system, layout, node);
  TypeSplitRanks out;
  out.node = node;
  out.type1_rank = rank(type1.matrix());
  out.type2_rank = rank(type2.matrix());
  out.joint_rank = rank(vstack(type1.matrix(), type2.matrix()));
  return out;
}

}  // namespace mdcsr
