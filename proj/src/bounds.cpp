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

#include "mdcsr/bounds.hpp"

#include <algorithm>
#include <charconv>

#include "mdcsr/error.hpp"

namespace mdcsr {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::Parse, "not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t stripe_capacity(std::int64_t d, std::int64_t k, std::int64_t l) {
  if (!(0 <= l && l <= k && k <= d)) {
    throw Error(Errc::BadRange, "capacity needs 0 <= l <= k <= d (d=" + std::to_string(d) +
                                    ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  }
  std::int64_t total = 0;
  for (std::int64_t t = l + 1; t <= k; ++t) total += d + 1 - t;
  return total;
}

NormalizedRates::NormalizedRates(int d, int l1, int l2, std::vector<Rational> rates)
    : d_(d), l1_(l1), l2_(l2), rates_(std::move(rates)) {
  if (l1 < 0 || l2 < 0 || l1 + l2 >= d) {
    throw Error(Errc::InvalidRates, "need l1, l2 >= 0 and l1 + l2 < d");
  }
  if (static_cast<int>(rates_.size()) != d - l()) {
    throw Error(Errc::InvalidRates, "expected " + std::to_string(d - l()) + " rates for levels " +
                                        std::to_string(l() + 1) + ".." + std::to_string(d));
  }
  Rational total(0);
  for (const Rational& r : rates_) {
    if (r < Rational(0)) throw Error(Errc::InvalidRates, "negative rate " + to_string(r));
    total += r;
  }
  if (total != Rational(0) && total != Rational(1)) {
    throw Error(Errc::InvalidRates, "rates must sum to 1, got " + to_string(total));
  }
}

const Rational& NormalizedRates::rate(int level) const {
  if (level <= l() || level > d_) {
    throw Error(Errc::UnknownLevel, "level " + std::to_string(level) + " outside [l+1, d]");
  }
  return rates_[static_cast<std::size_t>(level - l() - 1)];
}

Rational NormalizedRates::weighted_sum() const {
  Rational sum(0);
  for (int j = l() + 1; j <= d_; ++j) sum += rate(j) / stripe_capacity(d_, j, l());
  return sum;
}

Rational HalfPlane::alpha_floor(const Rational& beta) const {
  const Rational floor = (rhs - beta_coef * beta) / alpha_coef;
  return std::max(floor, Rational(0));
}

bool HalfPlane::contains(const TradeoffPoint& pt) const {
  return alpha_coef * pt.alpha + beta_coef * pt.beta >= rhs;
}

std::string HalfPlane::to_string() const {
  auto term = [](const Rational& c, const char* var) {
    return c == Rational(1) ? std::string(var) : mdcsr::to_string(c) + "*" + var;
  };
  return term(alpha_coef, "alpha") + " + " + term(beta_coef, "beta") + " >= " + mdcsr::to_string(rhs);
}

TradeoffPoint mbr_point(const NormalizedRates& rates) {
  const Rational sum = rates.weighted_sum();
  return {rates.d() * sum, sum};
}

Rational bound_beta(const NormalizedRates& rates) { return rates.weighted_sum(); }

HalfPlane bound_general(const NormalizedRates& rates) {
  if (rates.l1() > rates.l2()) {
    throw Error(Errc::SplitOutOfRegime, "bound holds only for l1 <= l2");
  }
  const int d = rates.d();
  const int l1 = rates.l1();
  return {Rational(1), Rational(stripe_capacity(d, d, l1 + 1)),
          (stripe_capacity(d, d, l1) + l1) * rates.weighted_sum()};
}

HalfPlane bound_prior(const NormalizedRates& rates) {
  const std::int64_t d = rates.d();
  const std::int64_t l = rates.l();
  return {Rational(1), Rational(d * (d - l) - l), (d - l) * (d + 1) * rates.weighted_sum()};
}

HalfPlane bound_l1_zero(const NormalizedRates& rates) {
  const std::int64_t d = rates.d();
  return {Rational(1), Rational(d * (d - 1), 2), Rational(d * (d + 1), 2) * rates.weighted_sum()};
}

IntersectionReport intersection_check(const NormalizedRates& rates) {
  const HalfPlane general = bound_general(rates);
  IntersectionReport report;
  report.intersection.beta = bound_beta(rates);
  report.intersection.alpha =
      (general.rhs - general.beta_coef * report.intersection.beta) / general.alpha_coef;
  report.mbr = mbr_point(rates);
  report.matches_mbr = report.intersection == report.mbr;
  const HalfPlane prior = bound_prior(rates);
  report.prior_tight =
      prior.alpha_coef * report.mbr.alpha + prior.beta_coef * report.mbr.beta == prior.rhs;
  return report;
}

DominanceReport dominance(int d, int l) {
  if (d < 1 || l < 0 || l >= d) throw Error(Errc::BadRange, "dominance needs 0 <= l < d");
  // Both bounds are homogeneous in the weighted sum; compare at sum = 1.
  const Rational sum(1);
  const HalfPlane lower{Rational(1), Rational(std::int64_t{d} * (d - 1), 2),
                        Rational(std::int64_t{d} * (d + 1), 2) * sum};
  const HalfPlane prior{Rational(1), Rational(std::int64_t{d} * (d - l) - l),
                        Rational(std::int64_t{d - l} * (d + 1)) * sum};
  DominanceReport report;
  report.d = d;
  report.l = l;
  report.witness_beta = 2 * sum;
  report.lower_at_mbr = lower.alpha_floor(sum);
  report.prior_at_mbr = prior.alpha_floor(sum);
  report.lower_at_witness = (lower.rhs - lower.beta_coef * report.witness_beta);
  report.prior_at_witness = (prior.rhs - prior.beta_coef * report.witness_beta);
  // Both lines pass through (d, 1) * sum; beyond it the flatter line is the
  // higher floor.
  if (lower.beta_coef < prior.beta_coef) {
    report.stronger = Stronger::LowerBound;
  } else if (lower.beta_coef > prior.beta_coef) {
    report.stronger = Stronger::Prior;
  } else {
    report.stronger = Stronger::Tie;
  }
  return report;
}

std::vector<RegionRow> region_export(const NormalizedRates& rates, std::span<const Rational> grid) {
  const Rational floor_beta = bound_beta(rates);
  std::optional<HalfPlane> general;
  if (rates.l1() <= rates.l2()) general = bound_general(rates);
  std::optional<HalfPlane> prior, l1_zero;
  if (rates.l1() == 0) {
    prior = bound_prior(rates);
    l1_zero = bound_l1_zero(rates);
  }

  std::vector<RegionRow> rows;
  for (const Rational& beta : grid) {
    RegionRow row;
    row.beta = beta;
    row.feasible = beta >= floor_beta;
    row.envelope = Rational(0);
    auto apply = [&](const std::optional<HalfPlane>& hp, std::optional<Rational>& slot) {
      if (!hp) return;
      slot = hp->alpha_floor(beta);
      row.envelope = std::max(row.envelope, *slot);
    };
    apply(general, row.floor_general);
    apply(prior, row.floor_prior);
    apply(l1_zero, row.floor_l1_zero);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mdcsr
