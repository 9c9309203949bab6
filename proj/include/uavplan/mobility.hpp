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

#ifndef UAVPLAN_MOBILITY_HPP
#define UAVPLAN_MOBILITY_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "uavplan/channel.hpp"

namespace uavplan {

/// Reference Point Group mobility: UAV 0 is the leader shuttling between two
/// waypoints; members track the leader's displacement with a bounded random
/// deviation. All motion is horizontal (fixed altitude).
struct RpgParams {
  Position3D leader_start{0, 0, 50};
  Position3D leader_end{100, 0, 50};
  double leader_speed_mps = 5.0;
  double step_duration_s = 1.0;
  double member_offset_radius_m = 30.0;
  double member_deviation_sigma_m = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// Per-step positions: positions[t][i] is UAV i at step t.
struct Trajectory {
  std::vector<std::vector<Position3D>> positions;

  std::size_t horizon() const { return positions.size(); }
  std::size_t num_uavs() const { return positions.empty() ? 0 : positions[0].size(); }
};

/// Mutable RPG state carried between steps.
struct RpgState {
  std::vector<Position3D> positions;  // [0] is the leader
  double leader_progress = 0;         // distance travelled from leader_start, pre-reflection
  int leader_direction = 1;           // +1 toward end, -1 back toward start
  std::mt19937_64 rng;
};

RpgState init_swarm(std::size_t n, const RpgParams& params);

/// Advances one step: the leader moves along its segment (reflecting at the
/// endpoints); each member copies the leader displacement plus a Gaussian
/// deviation, clamped to member_offset_radius around the leader.
void step(RpgState& state, const RpgParams& params);

Trajectory predict(std::size_t n, const RpgParams& params, std::size_t horizon);

/// CSV export: header `step,uav,x,y,h`; steps 1-based to match the planning
/// horizon, UAVs 1-based with UAV 1 the leader.
void export_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace uavplan

#endif  // UAVPLAN_MOBILITY_HPP
