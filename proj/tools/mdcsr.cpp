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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdcsr/cli/commands.hpp"

namespace {

using namespace mdcsr::cli;

// "a,b" -> pair; used by --split.
bool parse_split(const std::string& text, std::pair<std::size_t, std::size_t>& out) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    out = {std::stoul(text.substr(0, comma)), std::stoul(text.substr(comma + 1))};
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void add_bounds_flags(CLI::App* app, BoundsArgs& a, std::size_t& n) {
  app->add_option("--n", n, "number of nodes (checked against d)");
  app->add_option("--d", a.d, "repair degree")->required();
  app->add_option("--l1", a.l1, "type I eavesdropper count")->required();
  app->add_option("--l2", a.l2, "type II eavesdropper count")->required();
  app->add_option("--rates", a.rates, "normalized rates for levels l+1..d, e.g. 0,1/3,2/3")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mdcsr: multilevel secure regenerating storage toolkit"};
  app.require_subcommand(1);

  EncodeArgs enc;
  std::vector<std::string> message_specs;
  auto* encode = app.add_subcommand("encode", "encode message files into node shares");
  encode->add_option("config", enc.config, "system config (JSON)")->required();
  encode->add_option("--message", message_specs, "level=path, one per nonempty level");
  encode->add_option("--out", enc.out_dir, "output directory")->required();

  RepairArgs rep;
  auto* repair = app.add_subcommand("repair", "regenerate a node share from d helpers");
  repair->add_option("dir", rep.dir, "share directory")->required();
  repair->add_option("--target", rep.target, "node to rebuild")->required();
  repair->add_option("--helpers", rep.helpers, "helper nodes")->required()->delimiter(',');

  RecoverArgs rec;
  std::string rec_out;
  auto* recover = app.add_subcommand("recover", "recover one level's file from j shares");
  recover->add_option("dir", rec.dir, "share directory")->required();
  recover->add_option("--level", rec.level, "level j")->required();
  recover->add_option("--nodes", rec.nodes, "j node indices")->required()->delimiter(',');
  recover->add_option("--out", rec_out, "output file (default: stdout)");

  AuditArgs aud;
  std::string split;
  auto* audit = app.add_subcommand("audit", "rank-based secrecy audit");
  audit->add_option("config", aud.config, "system config (JSON)")->required();
  audit->add_flag("--exhaustive", aud.exhaustive, "every eavesdropper set of the given split");
  audit->add_option("--split", split, "override split sizes as a,b");
  audit->add_option("--e1", aud.e1, "type I nodes")->delimiter(',');
  audit->add_option("--e2", aud.e2, "type II nodes")->delimiter(',');

  BoundsArgs bnd;
  std::size_t bounds_n = 0;
  auto* bounds = app.add_subcommand("bounds", "outer bounds and MBR point for a rate vector");
  add_bounds_flags(bounds, bnd, bounds_n);

  RegionArgs reg;
  std::size_t region_n = 0;
  auto* region = app.add_subcommand("region", "tabulate alpha floors over a beta grid");
  add_bounds_flags(region, reg.bounds, region_n);
  region->add_option("--grid", reg.grid, "comma-separated beta values")->required();
  region->add_option("--format", reg.format, "csv or json");

  VerifyArgs ver;
  std::size_t corrupt = 0;
  auto* verify = app.add_subcommand("verify-lemmas", "check entropy inequalities on an n = d + 1 system");
  verify->add_option("config", ver.config, "system config (JSON)")->required();
  verify->add_option("--suite", ver.suite, "all|lemma1|exchange1|coro|exchange2|props|symmetry");
  verify->add_option("--corrupt-node", corrupt, "zero one node's encoding row first");

  SizesArgs siz;
  auto* sizes = app.add_subcommand("rates-to-sizes", "smallest stripe-divisible file sizes for given rates");
  sizes->add_option("--d", siz.d, "repair degree")->required();
  sizes->add_option("--l", siz.l, "total eavesdropper count l1 + l2")->required();
  sizes->add_option("--rates", siz.rates, "rates for levels l+1..d")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*encode) {
    for (const std::string& spec : message_specs) {
      const auto eq = spec.find('=');
      int level = 0;
      try {
        if (eq == std::string::npos) throw std::invalid_argument(spec);
        level = std::stoi(spec.substr(0, eq));
      } catch (const std::exception&) {
        std::cerr << "error: --message expects level=path, got '" << spec << "'\n";
        return kUsage;
      }
      enc.messages[level] = spec.substr(eq + 1);
    }
    return cmd_encode(enc, std::cout, std::cerr);
  }
  if (*repair) return cmd_repair(rep, std::cout, std::cerr);
  if (*recover) {
    if (!rec_out.empty()) rec.out = rec_out;
    return cmd_recover(rec, std::cout, std::cerr);
  }
  if (*audit) {
    if (!split.empty()) {
      std::pair<std::size_t, std::size_t> s;
      if (!parse_split(split, s)) {
        std::cerr << "error: --split expects a,b\n";
        return kUsage;
      }
      aud.split = s;
    }
    return cmd_audit(aud, std::cout, std::cerr);
  }
  if (*bounds) {
    if (bounds->count("--n")) bnd.n = bounds_n;
    return cmd_bounds(bnd, std::cout, std::cerr);
  }
  if (*region) {
    if (region->count("--n")) reg.bounds.n = region_n;
    return cmd_region(reg, std::cout, std::cerr);
  }
  if (*verify) {
    if (verify->count("--corrupt-node")) ver.corrupt_node = corrupt;
    return cmd_verify_lemmas(ver, std::cout, std::cerr);
  }
  if (*sizes) return cmd_rates_to_sizes(siz, std::cout, std::cerr);
  return kUsage;
}
