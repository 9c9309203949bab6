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

#ifndef UAVPLAN_SCENARIO_HPP
#define UAVPLAN_SCENARIO_HPP

#include <cstdint>
#include <vector>

#include "uavplan/channel.hpp"
#include "uavplan/cnn_profile.hpp"

namespace uavplan {

/// A planning instance: the CNN to place, the swarm's budgets, where the
/// requests originate, and the link rates (one matrix for the static case,
/// one per predicted step for the mobility-aware case).
struct Scenario {
  CnnProfile profile;
  std::size_t n = 0;                           // number of UAVs
  std::vector<std::int64_t> mem_budget;        // bytes per UAV
  std::vector<double> compute_budget;          // FLOPs per planning horizon, per UAV
  std::vector<double> compute_rate;            // FLOPS per UAV, for the latency metric
  std::vector<std::size_t> request_origins;    // request r -> source UAV, 0-based
  std::vector<RateMatrix> rates;               // T >= 1 matrices of size n

  std::size_t num_requests() const { return request_origins.size(); }
  std::size_t num_steps() const { return rates.size(); }
  std::size_t num_layers() const { return profile.num_layers(); }

  void validate() const;  // throws ValidationError

  /// Copy with only the first `r` requests kept.
  Scenario with_requests(std::size_t r) const;
};

}  // namespace uavplan

#endif  // UAVPLAN_SCENARIO_HPP
