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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdcsr/rational.hpp"

namespace mdcsr {

/// Per-stripe message capacity of a secure (., k, d, l) MBR code:
/// sum_{t=l+1}^{k} (d + 1 - t). Requires 0 <= l <= k <= d.
std::int64_t stripe_capacity(std::int64_t d, std::int64_t k, std::int64_t l);

/// Normalized file rates for levels l+1..d (l = l1 + l2). Rates are
/// nonnegative and sum to 1; the all-zero vector is accepted as a
/// degenerate query.
class NormalizedRates {
 public:
  NormalizedRates(int d, int l1, int l2, std::vector<Rational> rates);

  int d() const noexcept { return d_; }
  int l1() const noexcept { return l1_; }
  int l2() const noexcept { return l2_; }
  int l() const noexcept { return l1_ + l2_; }
  int first_level() const noexcept { return l() + 1; }
  // Rate of level j in [l+1, d].
  const Rational& rate(int level) const;
  const std::vector<Rational>& rates() const noexcept { return rates_; }

  /// sum_j rate_j / stripe_capacity(d, j, l).
  Rational weighted_sum() const;

 private:
  int d_, l1_, l2_;
  std::vector<Rational> rates_;
};

struct TradeoffPoint {
  Rational alpha;
  Rational beta;
  friend bool operator==(const TradeoffPoint&, const TradeoffPoint&) = default;
};

/// alpha_coef * alpha + beta_coef * beta >= rhs.
struct HalfPlane {
  Rational alpha_coef;
  Rational beta_coef;
  Rational rhs;

  // Smallest admissible alpha at the given beta, clamped at zero.
  Rational alpha_floor(const Rational& beta) const;
  bool contains(const TradeoffPoint& pt) const;
  // e.g. "alpha + 3*beta >= 16/15"
  std::string to_string() const;
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

TradeoffPoint mbr_point(const NormalizedRates& rates);
Rational bound_beta(const NormalizedRates& rates);
// Throws SplitOutOfRegime when l1 > l2.
HalfPlane bound_general(const NormalizedRates& rates);
HalfPlane bound_prior(const NormalizedRates& rates);
HalfPlane bound_l1_zero(const NormalizedRates& rates);

struct IntersectionReport {
  TradeoffPoint intersection;
  TradeoffPoint mbr;
  bool matches_mbr = false;
  bool prior_tight = false;
};

/// Intersects beta >= bound_beta with bound_general as equalities.
IntersectionReport intersection_check(const NormalizedRates& rates);

enum class Stronger { LowerBound, Prior, Tie };

struct DominanceReport {
  int d = 0;
  int l = 0;
  Stronger stronger = Stronger::Tie;
  // Witness on the unit-normalized instance (weighted sum = 1): both alpha
  // floors at beta = 1 (the MBR beta) and at beta = 2.
  Rational lower_at_mbr, prior_at_mbr;
  Rational lower_at_witness, prior_at_witness;
  Rational witness_beta;
  // True when the l1 = 0 bound is at least as strong as the prior bound.
  bool lower_bound_at_least_as_strong() const { return stronger != Stronger::Prior; }
};

DominanceReport dominance(int d, int l);

struct RegionRow {
  Rational beta;
  bool feasible = false;                  // beta >= bound_beta
  std::optional<Rational> floor_general;  // absent when l1 > l2
  std::optional<Rational> floor_prior;    // absent when l1 > 0
  std::optional<Rational> floor_l1_zero;  // absent when l1 > 0
  Rational envelope;                      // meaningful only when feasible
};

std::vector<RegionRow> region_export(const NormalizedRates& rates, std::span<const Rational> grid);

}  // namespace mdcsr
