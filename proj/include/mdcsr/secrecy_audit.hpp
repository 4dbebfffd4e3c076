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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdcsr/mdc_system.hpp"

namespace mdcsr {

/// Column map of the observation space: all message symbols first (level
/// ascending, stripe-major, message-cell order), then all key symbols in the
/// same order.
class ColumnLayout {
 public:
  struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;
  };

  explicit ColumnLayout(const System& system);

  std::size_t message_columns() const noexcept { return message_columns_; }
  std::size_t key_columns() const noexcept { return key_columns_; }
  std::size_t total() const noexcept { return message_columns_ + key_columns_; }
  Range message_range(int level) const;
  Range key_range(int level) const;
  const std::map<int, Range>& message_ranges() const noexcept { return message_ranges_; }
  const std::map<int, Range>& key_ranges() const noexcept { return key_ranges_; }

  /// Maps per-stripe cell coefficients of one level onto a full row.
  std::vector<Element> lift(const LevelCode& code, int level, std::size_t stripe,
                            std::span<const Element> cell_coeffs) const;

 private:
  std::size_t message_columns_ = 0;
  std::size_t key_columns_ = 0;
  std::map<int, Range> message_ranges_;
  std::map<int, Range> key_ranges_;
};

/// Where an observation row came from.
struct RowTag {
  enum class Kind { Stored, Repair, Message, Key };
  Kind kind = Kind::Stored;
  NodeId from = 0;  // stored: node; repair: helper
  NodeId to = 0;    // repair: target
  int level = 0;
  std::size_t stripe = 0;
  std::size_t index = 0;  // symbol index within the stripe (stored) or column
  std::size_t group = 0;  // repair group ordinal (repair rows)

  std::string describe() const;
};

/// Linear functionals over [message columns | key columns].
class ObservationSystem {
 public:
  ObservationSystem(std::size_t message_columns, std::size_t key_columns, FieldModulus field,
                    std::map<int, ColumnLayout::Range> message_ranges = {},
                    std::map<int, ColumnLayout::Range> key_ranges = {});
  explicit ObservationSystem(const ColumnLayout& layout, FieldModulus field);

  std::size_t message_columns() const noexcept { return message_columns_; }
  std::size_t key_columns() const noexcept { return matrix_.cols() - message_columns_; }
  std::size_t row_count() const noexcept { return matrix_.rows(); }
  const FieldMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<RowTag>& tags() const noexcept { return tags_; }
  const std::map<int, ColumnLayout::Range>& message_ranges() const noexcept { return message_ranges_; }
  const std::map<int, ColumnLayout::Range>& key_ranges() const noexcept { return key_ranges_; }

  void append(std::span<const Element> row, RowTag tag);
  void append_all(const ObservationSystem& other);

  /// Negative control: every key column is counted as a message column.
  ObservationSystem reclassify_keys_as_messages() const;
  /// Keeps only the columns of one level (message columns, then key columns).
  ObservationSystem restrict_to_level(int level) const;

 private:
  std::size_t message_columns_;
  FieldMatrix matrix_;
  std::vector<RowTag> tags_;
  std::map<int, ColumnLayout::Range> message_ranges_;
  std::map<int, ColumnLayout::Range> key_ranges_;
};

/// The d symbols node stores at every level and stripe.
ObservationSystem stored_observation(const System& system, const ColumnLayout& layout, NodeId node);
/// The single-symbol repair download helper -> target at every level and stripe.
ObservationSystem repair_observation(const System& system, const ColumnLayout& layout, NodeId helper,
                                     NodeId target);
/// Everything downloadable to regenerate target: every repair group of size
/// d not containing target, every helper in it. Rows are emitted per group.
ObservationSystem inbound_observation(const System& system, const ColumnLayout& layout, NodeId target);
ObservationSystem message_observation(const System& system, const ColumnLayout& layout, int level);
ObservationSystem key_observation(const System& system, const ColumnLayout& layout);

struct EavesdropperSpec {
  std::set<NodeId> type1;  // stored contents only
  std::set<NodeId> type2;  // full repair downloads
};

ObservationSystem observation_of(const System& system, const EavesdropperSpec& spec);

struct LeakageReport {
  std::size_t h_obs = 0;
  std::size_t h_obs_given_messages = 0;
  std::size_t leakage_rank = 0;
  bool secure() const noexcept { return leakage_rank == 0; }
};

LeakageReport leakage(const ObservationSystem& obs);
/// Leakage computed separately on each level's columns.
std::map<int, LeakageReport> leakage_by_level(const ObservationSystem& obs);

struct AuditEntry {
  EavesdropperSpec spec;
  bool compliant = false;  // |E1| = l1 and |E2| = l2
  LeakageReport report;
};

struct AuditSummary {
  std::size_t type1_count = 0;
  std::size_t type2_count = 0;
  std::vector<AuditEntry> entries;
  bool secure() const;
};

/// Every disjoint (E1, E2) with the system's (l1, l2) sizes, or with the
/// override sizes when given.
AuditSummary audit_all(const System& system,
                       std::optional<std::pair<std::size_t, std::size_t>> sizes = std::nullopt);

struct TypeSplitRanks {
  NodeId node = 0;
  std::size_t type1_rank = 0;
  std::size_t type2_rank = 0;
  std::size_t joint_rank = 0;  // both observations stacked
};

TypeSplitRanks type_split_ranks(const System& system, NodeId node);

}  // namespace mdcsr
