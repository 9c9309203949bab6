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

#include "uavplan/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "uavplan/errors.hpp"
#include "uavplan/mobility.hpp"
#include "uavplan/scenario_file.hpp"

namespace uavplan {

void SweepSpec::validate() const {
  if (model.empty()) throw ValidationError("sweep: model is required");
  if (n_list.empty() || mem_levels.empty() || area_sides.empty() || r_range.empty() ||
      methods.empty() || seeds.empty())
    throw ValidationError("sweep: all grid lists must be non-empty");
  if (!std::is_sorted(r_range.begin(), r_range.end()))
    throw ValidationError("sweep: r_range must be ascending");
  if (horizon < 1) throw ValidationError("sweep: horizon must be >= 1");
}

namespace {

Method method_from_string(const std::string& s) {
  if (s == "ould") return Method::kOuld;
  if (s == "ould_mp" || s == "ould-mp") return Method::kOuldMp;
  if (s == "nearest") return Method::kNearest;
  if (s == "hrm") return Method::kHrm;
  if (s == "nearest_hrm" || s == "nearest-hrm") return Method::kNearestHrm;
  throw ParseError("unknown method '" + s + "'");
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(trim(part));
  return parts;
}

std::string mem_level_name(std::int64_t bytes) {
  if (bytes == (std::int64_t{512} << 20)) return "high";
  if (bytes == (std::int64_t{256} << 20)) return "low";
  return std::to_string(bytes);
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sweep spec: " + path);

  SweepSpec spec;
  std::string line;
  int line_no = 0;
  std::string section;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (section != "sweep")
        throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + section +
                         "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "model") spec.model = value;
    else if (key == "n") {
      for (const auto& v : split(value, ','))
        spec.n_list.push_back(static_cast<std::size_t>(std::stoul(v)));
    } else if (key == "mem") {
      for (const auto& v : split(value, ','))
        spec.mem_levels.push_back((v == "high" || v == "low") ? memory_level_bytes(v)
                                                              : std::stoll(v));
    } else if (key == "compute_rate") spec.compute_rate = std::stod(value);
    else if (key == "budget_seconds") spec.budget_seconds = std::stod(value);
    else if (key == "area") {
      for (const auto& v : split(value, ',')) spec.area_sides.push_back(std::stod(v));
    } else if (key == "r") {
      for (const auto& v : split(value, ','))
        spec.r_range.push_back(static_cast<std::size_t>(std::stoul(v)));
    } else if (key == "horizon") spec.horizon = static_cast<std::size_t>(std::stoul(value));
    else if (key == "methods") {
      for (const auto& v : split(value, ',')) spec.methods.push_back(method_from_string(v));
    } else if (key == "seeds") {
      for (const auto& v : split(value, ',')) spec.seeds.push_back(std::stoull(v));
    } else if (key == "time_limit") spec.time_limit_s = std::stod(value);
    else if (key == "interference_mode") {
      if (value == "none") spec.interference = InterferenceMode::kNone;
      else if (value == "all_others") spec.interference = InterferenceMode::kAllOthers;
      else throw ParseError("line " + std::to_string(line_no) + ": bad interference_mode");
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

Scenario make_sweep_scenario(const SweepSpec& spec, std::size_t n, std::int64_t mem_bytes,
                             double area_side, std::uint64_t seed, std::size_t r_max) {
  RpgParams rpg;
  rpg.leader_start = {area_side * 0.25, area_side * 0.5, 50.0};
  rpg.leader_end = {area_side * 0.75, area_side * 0.5, 50.0};
  rpg.leader_speed_mps = 5.0;
  rpg.step_duration_s = 1.0;
  rpg.member_offset_radius_m = area_side * 0.5;
  rpg.member_deviation_sigma_m = area_side * 0.01;
  rpg.rng_seed = seed;

  const Trajectory traj = predict(n, rpg, spec.horizon);

  Scenario s;
  if (spec.model == "lenet") s.profile = builtin_lenet();
  else if (spec.model == "vgg16") s.profile = builtin_vgg16();
  else s.profile = load_profile(spec.model);
  s.n = n;
  s.mem_budget.assign(n, mem_bytes);
  s.compute_rate.assign(n, spec.compute_rate);
  s.compute_budget.assign(n, spec.compute_rate * spec.budget_seconds);
  for (const auto& positions : traj.positions)
    s.rates.push_back(rate_matrix(positions, spec.radio, spec.interference));

  std::mt19937_64 rng(seed ^ 0x5eedf00dULL);
  std::uniform_int_distribution<std::size_t> origin(0, n - 1);
  for (std::size_t r = 0; r < r_max; ++r) s.request_origins.push_back(origin(rng));
  s.validate();
  return s;
}

namespace {

void write_row_csv(std::ostream& out, const SweepRow& row) {
  out << method_name(row.method) << "," << row.requests << "," << row.n << "," << row.area_side
      << "," << mem_level_name(row.mem_bytes) << "," << row.report.avg_latency_per_request << ","
      << row.report.comm_seconds << "," << row.report.comp_seconds << ","
      << row.report.shared_data_bytes << "," << row.report.rejected_requests << ","
      << row.solve_time_s << "," << row.seed << "," << (row.timeout ? "timeout" : "ok") << "\n";
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::string& out_dir) {
  spec.validate();
  std::filesystem::create_directories(out_dir);
  std::ofstream out(std::filesystem::path(out_dir) / "results.csv");
  if (!out) throw IoError("cannot write results.csv in " + out_dir);
  out << "method,R,N,area,mem_level,avg_latency_s,comm_s,comp_s,shared_bytes,rejected,"
         "solve_time_s,seed,status\n";

  std::vector<SweepRow> rows;
  const std::size_t r_max = spec.r_range.back();
  for (Method method : spec.methods)
    for (std::size_t n : spec.n_list)
      for (std::int64_t mem : spec.mem_levels)
        for (double area : spec.area_sides)
          for (std::uint64_t seed : spec.seeds) {
            const Scenario base = make_sweep_scenario(spec, n, mem, area, seed, r_max);
            for (std::size_t r : spec.r_range) {
              SweepRow row;
              row.method = method;
              row.requests = r;
              row.n = n;
              row.area_side = area;
              row.mem_bytes = mem;
              row.seed = seed;
              const Scenario cell = base.with_requests(r);
              try {
                const auto t0 = std::chrono::steady_clock::now();
                PlanResult res = plan(cell, method, spec.time_limit_s);
                row.solve_time_s =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                row.report = std::move(res.report);
                row.timeout = !res.placement.optimal;
              } catch (const TimeoutError&) {
                row.timeout = true;
              }
              write_row_csv(out, row);
              out.flush();
              rows.push_back(std::move(row));
            }
          }
  return rows;
}

std::vector<RuntimeRow> runtime_compare(const SweepSpec& spec, std::size_t horizon) {
  spec.validate();
  if (horizon < 1) throw ValidationError("runtime_compare: horizon must be >= 1");

  SweepSpec mp_spec = spec;
  mp_spec.horizon = horizon;
  std::vector<RuntimeRow> rows;
  for (std::size_t r : spec.r_range) {
    const Scenario base = make_sweep_scenario(mp_spec, spec.n_list.front(),
                                              spec.mem_levels.front(), spec.area_sides.front(),
                                              spec.seeds.front(), r);
    RuntimeRow row;
    row.horizon = horizon;
    row.requests = r;
    try {
      // Static baseline: one independent solve per step.
      for (std::size_t t = 0; t < horizon; ++t) {
        Scenario step = base;
        step.rates = {base.rates[t]};
        const auto t0 = std::chrono::steady_clock::now();
        plan_ould(step, spec.time_limit_s);
        row.ould_total_s +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      const auto t0 = std::chrono::steady_clock::now();
      plan_ould_mp(base, spec.time_limit_s);
      row.ould_mp_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const TimeoutError&) {
      row.timeout = true;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_runtime_csv(const std::vector<RuntimeRow>& rows, std::ostream& out) {
  out << "T,R,ould_total_runtime_s,ould_mp_runtime_s,status\n";
  for (const RuntimeRow& row : rows)
    out << row.horizon << "," << row.requests << "," << row.ould_total_s << "," << row.ould_mp_s
        << "," << (row.timeout ? "timeout" : "ok") << "\n";
}

}  // namespace uavplan
