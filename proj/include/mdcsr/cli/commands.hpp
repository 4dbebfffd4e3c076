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
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdcsr/rational.hpp"

namespace mdcsr::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kViolation = 3 };

struct EncodeArgs {
  std::filesystem::path config;
  std::map<int, std::filesystem::path> messages;  // level -> message file
  std::filesystem::path out_dir;
};

struct RepairArgs {
  std::filesystem::path dir;
  std::size_t target = 0;
  std::vector<std::size_t> helpers;
};

struct RecoverArgs {
  std::filesystem::path dir;
  int level = 0;
  std::vector<std::size_t> nodes;
  std::optional<std::filesystem::path> out;  // symbols go to `out` stream when unset
};

struct AuditArgs {
  std::filesystem::path config;
  bool exhaustive = false;
  std::optional<std::pair<std::size_t, std::size_t>> split;
  std::vector<std::size_t> e1;
  std::vector<std::size_t> e2;
};

struct BoundsArgs {
  std::optional<std::size_t> n;
  int d = 0;
  int l1 = 0;
  int l2 = 0;
  std::string rates;  // comma-separated rationals, one per level l+1..d
};

struct RegionArgs {
  BoundsArgs bounds;
  std::string grid;  // comma-separated rationals
  std::string format = "csv";
};

struct VerifyArgs {
  std::filesystem::path config;
  std::string suite = "all";
  std::optional<std::size_t> corrupt_node;
};

struct SizesArgs {
  int d = 0;
  int l = 0;
  std::string rates;
};

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the process exit code.
int cmd_encode(const EncodeArgs& args, std::ostream& out, std::ostream& err);
int cmd_repair(const RepairArgs& args, std::ostream& out, std::ostream& err);
int cmd_recover(const RecoverArgs& args, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err);
int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err);
int cmd_region(const RegionArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify_lemmas(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_rates_to_sizes(const SizesArgs& args, std::ostream& out, std::ostream& err);

std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace mdcsr::cli
