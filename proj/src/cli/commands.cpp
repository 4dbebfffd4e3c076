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

#include "mdcsr/cli/commands.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "mdcsr/bounds.hpp"
#include "mdcsr/cli/config.hpp"
#include "mdcsr/cli/share_file.hpp"
#include "mdcsr/entropy_lab.hpp"
#include "mdcsr/error.hpp"
#include "mdcsr/secrecy_audit.hpp"

namespace mdcsr::cli {

namespace {

using nlohmann::ordered_json;

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

ordered_json node_list(const std::set<NodeId>& nodes) {
  ordered_json out = ordered_json::array();
  for (NodeId i : nodes) out.push_back(i);
  return out;
}

std::vector<NodeShare> load_shares(const std::filesystem::path& dir, const std::vector<std::size_t>& nodes,
                                   std::optional<SystemParams>& params) {
  std::vector<NodeShare> shares;
  for (std::size_t node : nodes) {
    ShareFile file = read_share(dir / share_file_name(node));
    if (file.share.node_id != node) {
      throw Error(Errc::Parse, share_file_name(node) + " holds node " + std::to_string(file.share.node_id));
    }
    if (params && (params->n != file.params.n || params->d != file.params.d || params->l1 != file.params.l1 ||
                   params->l2 != file.params.l2 || params->p != file.params.p ||
                   params->file_sizes != file.params.file_sizes)) {
      throw Error(Errc::Parse, share_file_name(node) + " belongs to a different system");
    }
    params = file.params;
    shares.push_back(std::move(file.share));
  }
  return shares;
}

NormalizedRates rates_of(const BoundsArgs& args) {
  if (args.n && *args.n <= static_cast<std::size_t>(args.d)) {
    throw Error(Errc::BadParameters, "need d < n");
  }
  return NormalizedRates(args.d, args.l1, args.l2, parse_rational_list(args.rates));
}

std::string cell(const std::optional<Rational>& v) { return v ? to_string(*v) : "n/a"; }

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw Error(Errc::Parse, "empty entry in list '" + std::string(text) + "'");
    out.push_back(parse_rational(item));
    start = comma + 1;
  }
  return out;
}

int cmd_encode(const EncodeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Config cfg = load_config(args.config);
    const System system = build_system(cfg.params);
    LevelMessages messages;
    for (const auto& [level, path] : args.messages) {
      if (!system.has_level(level)) {
        throw Error(Errc::UnknownLevel, "message given for level " + std::to_string(level) +
                                            ", which has no file in the config");
      }
      auto symbols = decode_symbols(read_bytes(path), system.field());
      if (symbols.size() != system.file_size(level)) {
        throw Error(Errc::LengthMismatch, "message for level " + std::to_string(level) + " has " +
                                              std::to_string(symbols.size()) + " symbols, expected B_" +
                                              std::to_string(level) + " = " +
                                              std::to_string(system.file_size(level)));
      }
      messages[level] = std::move(symbols);
    }
    for (const auto& [level, code] : system.levels()) {
      if (!messages.count(level)) {
        throw Error(Errc::LengthMismatch, "missing message file for level " + std::to_string(level));
      }
    }
    const auto shares = encode_system(system, messages, cfg.seed);
    std::filesystem::create_directories(args.out_dir);
    for (const NodeShare& share : shares) {
      write_share(args.out_dir / share_file_name(share.node_id), system, share);
    }
    out << ordered_json{{"nodes", shares.size()}, {"alpha", system.alpha()}, {"beta", system.beta()}}.dump()
        << "\n";
    return kOk;
  });
}

int cmd_repair(const RepairArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<SystemParams> params;
    const auto helpers = load_shares(args.dir, args.helpers, params);
    if (!params) throw Error(Errc::WrongHelperCount, "no helpers given");
    const System system = build_system(*params);
    if (args.target < 1 || args.target > system.n()) {
      throw Error(Errc::IndexOutOfRange, "target " + std::to_string(args.target) + " outside [1, n]");
    }
    const NodeShare rebuilt = repair_node(system, args.target, helpers);
    write_share(args.dir / share_file_name(args.target), system, rebuilt);
    out << ordered_json{{"target", args.target}, {"helpers", args.helpers},
                        {"downloaded_symbols", system.beta() * args.helpers.size()}}
               .dump()
        << "\n";
    return kOk;
  });
}

int cmd_recover(const RecoverArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<SystemParams> params;
    const auto shares = load_shares(args.dir, args.nodes, params);
    if (!params) throw Error(Errc::WrongShareCount, "no nodes given");
    const System system = build_system(*params);
    const auto symbols = recover_file(system, args.level, shares);
    const auto bytes = encode_symbols(symbols);
    if (args.out) {
      write_bytes(*args.out, bytes);
    } else {
      out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    return kOk;
  });
}

int cmd_audit(const AuditArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Config cfg = load_config(args.config);
    const System system = build_system(cfg.params);
    std::vector<AuditEntry> entries;
    if (args.exhaustive) {
      entries = audit_all(system, args.split).entries;
    } else {
      if (args.split) throw Error(Errc::BadParameters, "--split requires --exhaustive");
      AuditEntry entry;
      entry.spec.type1 = {args.e1.begin(), args.e1.end()};
      entry.spec.type2 = {args.e2.begin(), args.e2.end()};
      for (NodeId i : entry.spec.type1) {
        if (i < 1 || i > system.n()) throw Error(Errc::IndexOutOfRange, "--e1 node outside [1, n]");
      }
      for (NodeId i : entry.spec.type2) {
        if (i < 1 || i > system.n()) throw Error(Errc::IndexOutOfRange, "--e2 node outside [1, n]");
      }
      entry.compliant = entry.spec.type1.size() <= system.params().l1 &&
                        entry.spec.type2.size() <= system.params().l2;
      entry.report = leakage(observation_of(system, entry.spec));
      entries.push_back(std::move(entry));
    }
    std::size_t leaking = 0;
    for (const AuditEntry& e : entries) {
      if (!e.report.secure()) ++leaking;
      out << ordered_json{{"e1", node_list(e.spec.type1)},
                          {"e2", node_list(e.spec.type2)},
                          {"compliant", e.compliant},
                          {"observed_rank", e.report.h_obs},
                          {"leakage", e.report.leakage_rank}}
                 .dump()
          << "\n";
    }
    out << ordered_json{{"reports", entries.size()}, {"leaking", leaking}, {"secure", leaking == 0}}.dump()
        << "\n";
    return leaking == 0 ? kOk : kViolation;
  });
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NormalizedRates rates = rates_of(args);
    ordered_json report;
    ordered_json omitted = ordered_json::object();
    report["beta_floor"] = to_string(bound_beta(rates));
    if (rates.l1() <= rates.l2()) {
      report["b4"] = bound_general(rates).to_string();
    } else {
      omitted["b4"] = "split out of regime";
    }
    if (rates.l1() == 0) {
      report["type2_2"] = bound_prior(rates).to_string();
    } else {
      omitted["type2_2"] = "only stated for l1 = 0";
    }
    const TradeoffPoint mbr = mbr_point(rates);
    report["mbr"] = {to_string(mbr.alpha), to_string(mbr.beta)};
    if (!omitted.empty()) report["omitted"] = omitted;
    out << report.dump() << "\n";
    return kOk;
  });
}

int cmd_region(const RegionArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.format != "csv" && args.format != "json") {
      throw Error(Errc::Parse, "unknown format '" + args.format + "'");
    }
    const NormalizedRates rates = rates_of(args.bounds);
    const auto grid = parse_rational_list(args.grid);
    const auto rows = region_export(rates, grid);
    if (args.format == "csv") {
      out << "beta_bar,alpha_floor_B3_marker,alpha_floor_B4,alpha_floor_type2_2,alpha_floor_B,envelope\n";
      for (const RegionRow& r : rows) {
        out << to_string(r.beta) << "," << (r.feasible ? "0" : "inf") << "," << cell(r.floor_general) << ","
            << cell(r.floor_prior) << "," << cell(r.floor_l1_zero) << ","
            << (r.feasible ? to_string(r.envelope) : "inf") << "\n";
      }
    } else {
      for (const RegionRow& r : rows) {
        out << ordered_json{{"beta_bar", to_string(r.beta)},
                            {"alpha_floor_B3_marker", r.feasible ? "0" : "inf"},
                            {"alpha_floor_B4", cell(r.floor_general)},
                            {"alpha_floor_type2_2", cell(r.floor_prior)},
                            {"alpha_floor_B", cell(r.floor_l1_zero)},
                            {"envelope", r.feasible ? to_string(r.envelope) : "inf"}}
                   .dump()
            << "\n";
      }
    }
    return kOk;
  });
}

int cmd_verify_lemmas(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Suite suite = parse_suite(args.suite);
    const Config cfg = load_config(args.config);
    System system = build_system(cfg.params);
    if (args.corrupt_node) {
      if (*args.corrupt_node < 1 || *args.corrupt_node > system.n()) {
        throw Error(Errc::IndexOutOfRange, "--corrupt-node outside [1, n]");
      }
      system = system.with_zeroed_node(*args.corrupt_node);
    }
    const EntropyLab lab(std::move(system));
    bool all_ok = true;
    for (const CheckResult& r : run_suite(lab, suite)) {
      all_ok = all_ok && r.satisfied;
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      ordered_json line{{"name", r.name},   {"params", params},        {"lhs", to_string(r.lhs)},
                        {"rhs", to_string(r.rhs)}, {"slack", to_string(r.slack)},
                        {"satisfied", r.satisfied}};
      if (!r.detail.empty()) line["detail"] = r.detail;
      out << line.dump() << "\n";
    }
    return all_ok ? kOk : kViolation;
  });
}

int cmd_rates_to_sizes(const SizesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rates = parse_rational_list(args.rates);
    ordered_json files = ordered_json::object();
    for (const auto& [level, size] : minimal_file_sizes(args.d, args.l, rates)) {
      files[std::to_string(level)] = size;
    }
    out << ordered_json{{"files", files}}.dump() << "\n";
    return kOk;
  });
}

}  // namespace mdcsr::cli
