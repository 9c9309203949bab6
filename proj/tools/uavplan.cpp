// Copyright 2026 The uavplan Authors
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

// uavplan: place CNN layers on a UAV swarm and reproduce the latency /
// shared-data / capacity experiments.
//
// Exit codes: 0 success, 1 parse or I/O error, 2 infeasible (every request
// rejected), 3 time limit hit (best incumbent reported).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "uavplan/errors.hpp"
#include "uavplan/experiments.hpp"
#include "uavplan/mobility.hpp"
#include "uavplan/planner.hpp"
#include "uavplan/scenario_file.hpp"

namespace {

using namespace uavplan;

Method parse_method(const std::string& s) {
  if (s == "ould") return Method::kOuld;
  if (s == "ould-mp") return Method::kOuldMp;
  if (s == "nearest") return Method::kNearest;
  if (s == "hrm") return Method::kHrm;
  if (s == "nearest-hrm") return Method::kNearestHrm;
  throw ParseError("unknown method '" + s + "'");
}

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::optional<double> time_limit_s;
  std::optional<std::string> interference;
};

void apply_overrides(ScenarioFile& sf, const GlobalOpts& g) {
  if (g.seed && sf.rpg) sf.rpg->rng_seed = *g.seed;
  if (g.time_limit_s) sf.time_limit_s = *g.time_limit_s;
  if (g.interference) {
    if (*g.interference == "none") sf.interference = InterferenceMode::kNone;
    else if (*g.interference == "all_others") sf.interference = InterferenceMode::kAllOthers;
    else throw ParseError("--interference must be none or all_others");
  }
}

std::string mem_level_name(std::int64_t bytes) {
  if (bytes == (std::int64_t{512} << 20)) return "high";
  if (bytes == (std::int64_t{256} << 20)) return "low";
  return std::to_string(bytes);
}

int cmd_solve(const std::string& scenario_path, const std::string& method_str,
              const std::string& out_dir, const GlobalOpts& g) {
  ScenarioFile sf = parse_scenario_file(scenario_path);
  apply_overrides(sf, g);
  const Method method = parse_method(method_str);
  const Scenario scenario = build_scenario(sf);

  PlanResult res;
  try {
    res = plan(scenario, method, sf.time_limit_s);
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return 3;
  }

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(std::filesystem::path(out_dir) / "placement.csv");
    save_placement(res.placement, out);
  }
  {
    std::ofstream out(std::filesystem::path(out_dir) / "summary.json");
    save_summary_json(res.placement, res.report, out);
  }
  {
    std::ofstream out(std::filesystem::path(out_dir) / "report.csv");
    out << "method,R,N,area,mem_level,avg_latency_s,comm_s,comp_s,shared_bytes,rejected,"
           "solve_time_s\n";
    out << method_name(method) << "," << scenario.num_requests() << "," << scenario.n << ",0,"
        << mem_level_name(scenario.mem_budget[0]) << "," << res.report.avg_latency_per_request
        << "," << res.report.comm_seconds << "," << res.report.comp_seconds << ","
        << res.report.shared_data_bytes << "," << res.report.rejected_requests << ","
        << res.placement.solve_time_s << "\n";
  }

  const std::size_t accepted = scenario.num_requests() - res.report.rejected_requests;
  std::cout << "method:            " << method_name(method) << "\n"
            << "objective:         " << res.placement.objective_value << " s (communication)\n"
            << "avg latency:       " << res.report.avg_latency_per_request << " s/request\n"
            << "  comm total:      " << res.report.comm_seconds << " s\n"
            << "  comp total:      " << res.report.comp_seconds << " s\n"
            << "shared data:       " << res.report.shared_data_bytes << " bytes\n"
            << "accepted requests: " << accepted << "/" << scenario.num_requests() << "\n"
            << "rejected requests: " << res.report.rejected_requests
            << (res.report.rejected_requests ? "  (capacity hit)" : "") << "\n"
            << "optimal:           " << (res.placement.optimal ? "yes" : "no (time limit)")
            << "\n";

  if (res.report.rejected_requests == scenario.num_requests()) return 2;
  if (!res.placement.optimal) return 3;
  return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir, const GlobalOpts& g) {
  SweepSpec spec = parse_sweep_spec(spec_path);
  if (g.time_limit_s) spec.time_limit_s = *g.time_limit_s;
  if (g.seed) spec.seeds = {*g.seed};
  if (g.interference)
    spec.interference = (*g.interference == "all_others") ? InterferenceMode::kAllOthers
                                                          : InterferenceMode::kNone;
  const auto rows = run_sweep(spec, out_dir);
  std::cout << "wrote " << rows.size() << " rows to " << out_dir << "/results.csv\n";
  return 0;
}

int cmd_capacity(const std::string& scenario_path, std::size_t r_max, const GlobalOpts& g) {
  ScenarioFile sf = parse_scenario_file(scenario_path);
  apply_overrides(sf, g);
  Scenario scenario = build_scenario(sf);
  if (scenario.num_requests() < r_max) {
    // Reuse the configured origins round-robin up to r_max.
    const auto base = scenario.request_origins;
    while (scenario.request_origins.size() < r_max)
      scenario.request_origins.push_back(base[scenario.request_origins.size() % base.size()]);
  }
  const std::size_t cap = system_capacity(scenario, r_max, sf.time_limit_s);
  std::cout << "system capacity: " << cap << " (scanned R=1.." << r_max << ")\n";
  return 0;
}

int cmd_profile(const std::string& which, bool summary) {
  CnnProfile p;
  if (which == "lenet") p = builtin_lenet();
  else if (which == "vgg16") p = builtin_vgg16();
  else p = load_profile(which);

  std::cout << "model: " << p.model_name << "\n"
            << "M=" << p.num_layers() << "\n"
            << "input_bytes: " << p.input_bytes << "\n"
            << "total_memory: " << total_memory(p) << " bytes ("
            << static_cast<double>(total_memory(p)) / (1 << 20) << " MiB)\n"
            << "total_flops: " << total_flops(p) << "\n";
  if (summary) return 0;
  std::cout << "index,name,mem_bytes,flops,output_bytes\n";
  for (const LayerSpec& l : p.layers)
    std::cout << l.index << "," << l.name << "," << l.mem_bytes << "," << l.flops << ","
              << l.output_bytes << "\n";
  return 0;
}

int cmd_mobility_export(const std::string& scenario_path, const std::string& out_path,
                        const GlobalOpts& g) {
  ScenarioFile sf = parse_scenario_file(scenario_path);
  apply_overrides(sf, g);
  if (!sf.rpg) throw ParseError(scenario_path + ": mobility-export needs a [mobility] section");
  const Trajectory traj = predict(sf.n, *sf.rpg, std::max<std::size_t>(1, sf.horizon));
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  export_trajectory_csv(traj, out);
  std::cout << "wrote " << traj.horizon() << " steps x " << traj.num_uavs() << " UAVs to "
            << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNN layer placement on a UAV swarm"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::uint64_t seed_opt = 0;
  double time_limit_opt = 0;
  std::string interference_opt;
  app.add_option("--seed", seed_opt, "Override the mobility RNG seed")
      ->each([&](const std::string&) { g.seed = seed_opt; });
  app.add_option("--time-limit", time_limit_opt, "Solver time limit in seconds")
      ->each([&](const std::string&) { g.time_limit_s = time_limit_opt; });
  app.add_option("--interference", interference_opt, "none or all_others")
      ->each([&](const std::string&) { g.interference = interference_opt; });

  std::string scenario_path, method = "ould", out_dir = "out", spec_path, profile_arg, out_path;
  std::size_t r_max = 1;
  bool summary = false;

  auto* solve = app.add_subcommand("solve", "Plan one scenario and write placement + report");
  solve->add_option("scenario", scenario_path, "Scenario file")->required();
  solve->add_option("--method", method, "ould|ould-mp|nearest|hrm|nearest-hrm");
  solve->add_option("--out", out_dir, "Output directory");

  auto* sweep = app.add_subcommand("sweep", "Run a scenario grid and write results.csv");
  sweep->add_option("spec", spec_path, "Sweep spec file")->required();
  sweep->add_option("--out", out_dir, "Output directory");

  auto* capacity = app.add_subcommand("capacity", "Scan for the largest fully-served load");
  capacity->add_option("scenario", scenario_path, "Scenario file")->required();
  capacity->add_option("--rmax", r_max, "Upper bound of the scan")->required();

  auto* profile = app.add_subcommand("profile", "Print a CNN profile");
  profile->add_option("model", profile_arg, "lenet, vgg16, or a profile CSV path")->required();
  profile->add_flag("--summary", summary, "Totals only, no per-layer table");

  auto* mobility = app.add_subcommand("mobility-export", "Write the predicted trajectory CSV");
  mobility->add_option("scenario", scenario_path, "Scenario file")->required();
  mobility->add_option("--out", out_path, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(scenario_path, method, out_dir, g);
    if (sweep->parsed()) return cmd_sweep(spec_path, out_dir, g);
    if (capacity->parsed()) return cmd_capacity(scenario_path, r_max, g);
    if (profile->parsed()) return cmd_profile(profile_arg, summary);
    if (mobility->parsed()) return cmd_mobility_export(scenario_path, out_path, g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
