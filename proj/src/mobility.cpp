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

#include "uavplan/mobility.hpp"

#include <cmath>
#include <ostream>

#include "uavplan/errors.hpp"

namespace uavplan {

void RpgParams::validate() const {
  if (leader_speed_mps <= 0) throw ValidationError("leader_speed must be > 0");
  if (step_duration_s <= 0) throw ValidationError("step_duration must be > 0");
  if (member_offset_radius_m < 0) throw ValidationError("member_offset_radius must be >= 0");
  if (member_deviation_sigma_m < 0) throw ValidationError("member_deviation_sigma must be >= 0");
  if (leader_start.h <= 0 || leader_end.h <= 0) throw ValidationError("altitude must be > 0");
}

namespace {

double segment_length(const RpgParams& p) {
  const double dx = p.leader_end.x - p.leader_start.x;
  const double dy = p.leader_end.y - p.leader_start.y;
  return std::sqrt(dx * dx + dy * dy);
}

Position3D leader_at(const RpgParams& p, double progress) {
  const double len = segment_length(p);
  const double f = (len > 0) ? progress / len : 0.0;
  return {p.leader_start.x + f * (p.leader_end.x - p.leader_start.x),
          p.leader_start.y + f * (p.leader_end.y - p.leader_start.y), p.leader_start.h};
}

// Clamps `pos` into the disk of the given radius around `center` (horizontal).
Position3D clamp_to_group(const Position3D& pos, const Position3D& center, double radius) {
  const double dx = pos.x - center.x;
  const double dy = pos.y - center.y;
  const double d = std::sqrt(dx * dx + dy * dy);
  if (d <= radius || d == 0) return pos;
  const double f = radius / d;
  return {center.x + dx * f, center.y + dy * f, pos.h};
}

}  // namespace

RpgState init_swarm(std::size_t n, const RpgParams& params) {
  params.validate();
  if (n < 1) throw ValidationError("init_swarm: need at least one UAV");

  RpgState state;
  state.rng.seed(params.rng_seed);
  state.positions.resize(n);
  state.positions[0] = params.leader_start;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 1; i < n; ++i) {
    // Uniform over the disk: radius via sqrt of a uniform draw.
    const double r = params.member_offset_radius_m * std::sqrt(unit(state.rng));
    const double theta = 2.0 * M_PI * unit(state.rng);
    state.positions[i] = {params.leader_start.x + r * std::cos(theta),
                          params.leader_start.y + r * std::sin(theta), params.leader_start.h};
  }
  return state;
}

void step(RpgState& state, const RpgParams& params) {
  const double len = segment_length(params);
  const Position3D old_leader = state.positions[0];

  double travel = params.leader_speed_mps * params.step_duration_s;
  if (len > 0) {
    double progress = state.leader_progress + state.leader_direction * travel;
    // Reflect at both endpoints; loop handles steps longer than the segment.
    while (progress < 0 || progress > len) {
      if (progress < 0) {
        progress = -progress;
        state.leader_direction = -state.leader_direction;
      } else {
        progress = 2 * len - progress;
        state.leader_direction = -state.leader_direction;
      }
    }
    state.leader_progress = progress;
  }
  const Position3D new_leader = leader_at(params, state.leader_progress);
  state.positions[0] = new_leader;

  const double ldx = new_leader.x - old_leader.x;
  const double ldy = new_leader.y - old_leader.y;
  std::normal_distribution<double> dev(0.0, params.member_deviation_sigma_m);
  for (std::size_t i = 1; i < state.positions.size(); ++i) {
    Position3D p = state.positions[i];
    p.x += ldx;
    p.y += ldy;
    if (params.member_deviation_sigma_m > 0) {
      p.x += dev(state.rng);
      p.y += dev(state.rng);
    }
    state.positions[i] = clamp_to_group(p, new_leader, params.member_offset_radius_m);
  }
}

Trajectory predict(std::size_t n, const RpgParams& params, std::size_t horizon) {
  if (horizon < 1) throw ValidationError("predict: horizon must be >= 1");
  RpgState state = init_swarm(n, params);
  Trajectory traj;
  traj.positions.reserve(horizon);
  traj.positions.push_back(state.positions);
  for (std::size_t t = 1; t < horizon; ++t) {
    step(state, params);
    traj.positions.push_back(state.positions);
  }
  return traj;
}

void export_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  out << "step,uav,x,y,h\n";
  for (std::size_t t = 0; t < trajectory.horizon(); ++t)
    for (std::size_t i = 0; i < trajectory.positions[t].size(); ++i) {
      const Position3D& p = trajectory.positions[t][i];
      out << (t + 1) << "," << (i + 1) << "," << p.x << "," << p.y << "," << p.h << "\n";
    }
}

}  // namespace uavplan
