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

#ifndef UAVPLAN_SCENARIO_FILE_HPP
#define UAVPLAN_SCENARIO_FILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavplan/channel.hpp"
#include "uavplan/mobility.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

/// Parsed scenario document. Sections: [swarm], [radio], [model], [requests],
/// [mobility], [solver]. Unknown keys are rejected with line numbers.
struct ScenarioFile {
  // [swarm]
  std::size_t n = 0;
  std::vector<std::int64_t> mem_budget;        // expanded from level keyword or list
  double compute_rate = 9.5e9;                 // FLOPS, homogeneous
  double budget_seconds = 10.0;                // c-bar = compute_rate * budget_seconds
  std::vector<Position3D> positions;           // explicit; empty => use RPG init
  // [radio]
  RadioParams radio;
  // [model]
  std::string model;                            // "lenet", "vgg16", or a profile path
  // [requests]
  std::vector<std::size_t> origins;             // 0-based after parsing
  // [mobility]
  std::optional<RpgParams> rpg;
  std::size_t horizon = 1;
  // [solver]
  double time_limit_s = 60.0;
  InterferenceMode interference = InterferenceMode::kNone;
};

/// Memory level keywords: high = 512 MiB, low = 256 MiB.
std::int64_t memory_level_bytes(const std::string& level);

ScenarioFile parse_scenario_file(const std::string& path);

/// Materializes the planning instance: loads the profile, generates positions
/// (RPG when no explicit ones are given), and computes the rate matrices —
/// one per horizon step when mobility is configured.
Scenario build_scenario(const ScenarioFile& file);

}  // namespace uavplan

#endif  // UAVPLAN_SCENARIO_FILE_HPP
