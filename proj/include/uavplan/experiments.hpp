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

#ifndef UAVPLAN_EXPERIMENTS_HPP
#define UAVPLAN_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uavplan/planner.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

/// A grid of scenario sweeps: one results.csv row per
/// (method, N, mem, area, R, seed) cell.
struct SweepSpec {
  std::string model = "lenet";  // builtin name or profile path
  std::vector<std::size_t> n_list;
  std::vector<std::int64_t> mem_levels;  // bytes per UAV
  double compute_rate = 9.5e9;           // FLOPS
  double budget_seconds = 10.0;
  std::vector<double> area_sides;        // meters, square side
  std::vector<std::size_t> r_range;      // ascending request counts
  std::size_t horizon = 1;
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds;
  double time_limit_s = 60.0;
  RadioParams radio;
  InterferenceMode interference = InterferenceMode::kNone;

  void validate() const;
};

SweepSpec parse_sweep_spec(const std::string& path);

/// Deterministic scenario for one sweep cell: an RPG swarm covering the
/// square area, seeded member placement and request origins.
Scenario make_sweep_scenario(const SweepSpec& spec, std::size_t n, std::int64_t mem_bytes,
                             double area_side, std::uint64_t seed, std::size_t r_max);

struct SweepRow {
  Method method;
  std::size_t requests = 0;
  std::size_t n = 0;
  double area_side = 0;
  std::int64_t mem_bytes = 0;
  LatencyReport report;
  double solve_time_s = 0;
  std::uint64_t seed = 0;
  bool timeout = false;
};

/// Runs the grid and writes `<out_dir>/results.csv`, flushing row by row.
/// Per-cell timeouts are recorded in the row's status column and the sweep
/// continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const std::string& out_dir);

struct RuntimeRow {
  std::size_t horizon = 0;
  std::size_t requests = 0;
  double ould_total_s = 0;   // T independent single-step solves, summed
  double ould_mp_s = 0;      // one solve over the whole horizon
  bool timeout = false;
};

/// Wall-clock comparison of per-step re-solving vs the one-shot horizon
/// model, for each R in spec.r_range.
std::vector<RuntimeRow> runtime_compare(const SweepSpec& spec, std::size_t horizon);

void write_runtime_csv(const std::vector<RuntimeRow>& rows, std::ostream& out);

}  // namespace uavplan

#endif  // UAVPLAN_EXPERIMENTS_HPP
