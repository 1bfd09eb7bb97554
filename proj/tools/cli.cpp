// Copyright 2026 The qnl Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qnl/qnl.hpp"

namespace qnl::cli {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw UsageError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

// "k1=v1,k2=v2" into a map; keys must be unique.
std::map<std::string, double, std::less<>> parse_assignments(std::string_view body) {
  std::map<std::string, double, std::less<>> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw UsageError("expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    if (!out.emplace(key, parse_real(item.substr(eq + 1), key)).second)
      throw UsageError("duplicate parameter '" + key + "'");
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw UsageError("trailing comma in state parameters");
  }
  return out;
}

double require_key(const std::map<std::string, double, std::less<>>& kv, std::string_view key,
                   std::string_view family) {
  const auto it = kv.find(key);
  if (it == kv.end())
    throw UsageError(std::string(family) + " state needs parameter '" + std::string(key) + "'");
  return it->second;
}

void require_only(const std::map<std::string, double, std::less<>>& kv,
                  std::initializer_list<std::string_view> keys, std::string_view family) {
  for (const auto& [k, v] : kv)
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw UsageError("unknown parameter '" + k + "' for " + std::string(family) + " state");
}

// Input resolution: any library validation failure is a usage error.
template <typename F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const qnl::Error& e) {
    throw UsageError(e.what());
  }
}

ChannelFamily resolve_channel(const std::string& name) {
  const auto family = parse_channel_family(name);
  if (!family)
    throw UsageError("unknown channel '" + name +
                     "' (expected amplitude-damping, phase-damping or depolarizing)");
  return *family;
}

nlohmann::json json_number(double v) { return round_significant(v); }

nlohmann::json json_number(const std::optional<double>& v) {
  return v ? json_number(*v) : nlohmann::json(nullptr);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw UsageError("failed writing output file '" + path + "'");
}

int cmd_measures(const std::string& spec, std::ostream& out) {
  const DensityMatrix rho = as_usage([&] { return parse_state_spec(spec); });
  const MeasureReport r = classify(rho);
  const nlohmann::json j = {
      {"concurrence", json_number(r.concurrence)},
      {"fidelity", json_number(r.fidelity)},
      {"n_value", json_number(r.n_value)},
      {"bell", json_number(r.bell)},
      {"class", std::string(to_string(r.hierarchy_class))},
      {"region", std::string(to_string(region_of(r.hierarchy_class)))},
  };
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_scan(const std::string& spec, const std::string& channel, double qmin, double qmax,
             long long steps, std::ostream& out) {
  const DensityMatrix rho = as_usage([&] { return parse_state_spec(spec); });
  const ChannelFamily family = resolve_channel(channel);
  if (!(qmin >= 0.0 && qmin < qmax && qmax <= 1.0))
    throw UsageError("need 0 <= qmin < qmax <= 1");
  if (steps < 2) throw UsageError("--steps must be at least 2");

  const auto grid = linear_grid(qmin, qmax, static_cast<std::size_t>(steps));
  const auto rows = scan(rho, family, grid);
  out << "q,concurrence,fidelity,bell\n";
  for (const auto& r : rows)
    out << format_number(r.q) << ',' << format_number(r.concurrence) << ','
        << format_number(r.fidelity) << ',' << format_number(r.bell) << '\n';
  return kExitOk;
}

int cmd_thresholds(const std::string& spec, const std::string& channel, double tol,
                   std::ostream& out) {
  const DensityMatrix rho = as_usage([&] { return parse_state_spec(spec); });
  const ChannelFamily family = resolve_channel(channel);
  if (!(tol > 0.0 && tol <= 1e-3)) throw UsageError("--tol must lie in (0, 1e-3]");

  const ThresholdSet ts = threshold_set(rho, family, tol);
  const nlohmann::json j = {
      {"q_G", json_number(ts.q_g)},
      {"q_B", json_number(ts.q_b)},
      {"q_F", json_number(ts.q_f)},
      {"q_C", json_number(ts.q_c)},
      {"hierarchy_ok", hierarchy_check(ts)},
  };
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_sample_mems(long long n, std::uint64_t seed, const std::string& channel, double tol,
                    const std::string& path, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const ChannelFamily family = resolve_channel(channel);
  if (!(tol > 0.0 && tol <= 1e-3)) throw UsageError("--tol must lie in (0, 1e-3]");
  if (path.empty()) throw UsageError("--out is required");

  SamplerConfig cfg;
  cfg.n_states = static_cast<std::size_t>(n);
  cfg.seed = seed;
  cfg.channel = family;
  cfg.tol = tol;
  const auto records = hierarchy_experiment(cfg);

  std::ofstream f = open_output(path);
  write_hierarchy_csv(f, records);
  finish_output(f, path);

  const auto ok = std::count_if(records.begin(), records.end(),
                                [](const HierarchyRecord& r) { return gaps_nonnegative(r); });
  const auto partial = std::count_if(records.begin(), records.end(), [](const HierarchyRecord& r) {
    return std::any_of(r.gaps.begin(), r.gaps.end(), [](const auto& g) { return !g; });
  });
  out << "wrote " << records.size() << " records to " << path << "; " << ok
      << " satisfy the hierarchy; " << partial << " have absent gaps\n";
  return kExitOk;
}

int cmd_werner_map(long long grid, const std::string& path, std::ostream& out) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  if (path.empty()) throw UsageError("--out is required");

  std::ofstream f = open_output(path);
  f << "p,q,region\n";
  const auto axis = linear_grid(0.0, 1.0, static_cast<std::size_t>(grid));
  for (double p : axis)
    for (double q : axis)
      f << format_number(p) << ',' << format_number(q) << ','
        << to_string(werner_region(werner_ad::Point(p, q))) << '\n';
  finish_output(f, path);
  out << "wrote " << axis.size() * axis.size() << " points to " << path << '\n';
  return kExitOk;
}

}  // namespace

DensityMatrix parse_state_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("state spec must look like family:params, got '" + std::string(spec) + "'");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);

  if (family == "bell") {
    if (body != "singlet") throw UsageError("only bell:singlet is supported");
    return bell_singlet();
  }
  if (family == "werner") {
    const auto kv = parse_assignments(body);
    require_only(kv, {"p"}, family);
    return werner(WernerParams(require_key(kv, "p", family)));
  }
  if (family == "mems") {
    const auto kv = parse_assignments(body);
    require_only(kv, {"p1", "p2", "p3", "p4"}, family);
    return mems(MemsWeights(require_key(kv, "p1", family), require_key(kv, "p2", family),
                            require_key(kv, "p3", family), require_key(kv, "p4", family)));
  }
  if (family == "file") {
    if (body.empty()) throw UsageError("file: state spec needs a path");
    return load_density_json(std::string(body));
  }
  throw UsageError("unknown state family '" + std::string(family) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlocal correlations of two-qubit states under noisy channels", "qnl"};
  app.require_subcommand(1, 1);

  std::string state;
  std::string channel = std::string(to_string(ChannelFamily::AmplitudeDamping));
  std::string out_path;
  double qmin = 0.0;
  double qmax = 1.0;
  long long steps = 101;
  long long n = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double sample_tol = 1e-6;
  long long grid = 101;

  const std::string state_help = "bell:singlet | werner:p=X | mems:p1=..,p2=..,p3=..,p4=.. | file:PATH";
  const std::string channel_help = "amplitude-damping | phase-damping | depolarizing";

  auto* measures = app.add_subcommand("measures", "Measures and hierarchy class of one state (JSON)");
  measures->add_option("--state", state, state_help)->required();

  auto* scan_cmd = app.add_subcommand("scan", "Measures along a q grid (CSV)");
  scan_cmd->add_option("--state", state, state_help)->required();
  scan_cmd->add_option("--channel", channel, channel_help);
  scan_cmd->add_option("--qmin", qmin, "Lowest channel strength");
  scan_cmd->add_option("--qmax", qmax, "Highest channel strength");
  scan_cmd->add_option("--steps", steps, "Number of grid points");

  auto* thresholds = app.add_subcommand("thresholds", "Critical channel strengths (JSON)");
  thresholds->add_option("--state", state, state_help)->required();
  thresholds->add_option("--channel", channel, channel_help);
  thresholds->add_option("--tol", tol, "Bisection tolerance in (0, 1e-3]");

  auto* sample = app.add_subcommand("sample-mems", "Random MEMS hierarchy experiment (CSV file)");
  sample->add_option("--n", n, "Number of accepted states")->required();
  sample->add_option("--seed", seed, "Generator seed");
  sample->add_option("--channel", channel, channel_help);
  sample->add_option("--tol", sample_tol, "Bisection tolerance in (0, 1e-3]");
  sample->add_option("--out", out_path, "Output CSV path")->required();

  auto* wmap = app.add_subcommand("werner-map", "Werner (p, q) region map (CSV file)");
  wmap->add_option("--grid", grid, "Points per axis");
  wmap->add_option("--out", out_path, "Output CSV path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qnl: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*measures) return cmd_measures(state, out);
    if (*scan_cmd) return cmd_scan(state, channel, qmin, qmax, steps, out);
    if (*thresholds) return cmd_thresholds(state, channel, tol, out);
    if (*sample) return cmd_sample_mems(n, seed, channel, sample_tol, out_path, out);
    if (*wmap) return cmd_werner_map(grid, out_path, out);
  } catch (const UsageError& e) {
    err << "qnl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qnl: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  err << "qnl: no subcommand given\n";
  return kExitUsage;
}

}  // namespace qnl::cli
