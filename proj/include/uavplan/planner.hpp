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

#ifndef UAVPLAN_PLANNER_HPP
#define UAVPLAN_PLANNER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uavplan/ilp.hpp"
#include "uavplan/scenario.hpp"

namespace uavplan {

enum class Method { kOuld, kOuldMp, kNearest, kHrm, kNearestHrm };

std::string method_name(Method method);

struct RequestLatency {
  double comm_seconds = 0;
  double comp_seconds = 0;
  double total_seconds = 0;
  bool accepted = true;
};

struct LatencyReport {
  Method method = Method::kOuld;
  std::vector<RequestLatency> per_request;
  double avg_latency_per_request = 0;  // over accepted requests
  double comm_seconds = 0;
  double comp_seconds = 0;
  std::int64_t shared_data_bytes = 0;  // K_s on off-source first hops + K_j transfers
  std::size_t rejected_requests = 0;
  bool feasible = true;
  std::string note;  // violated-constraint text when infeasible
};

struct PlanResult {
  Placement placement;
  LatencyReport report;
  std::vector<LatencyReport> per_step;  // mobility-aware runs only
};

/// Recomputes latency and shared data for a placement, independently of the
/// solver. Throws InfeasiblePlacementError (with the violated constraint
/// named) when the placement does not fit the scenario.
LatencyReport evaluate(const Placement& placement, const Scenario& scenario,
                       Method method = Method::kOuld);

/// Evaluates a placement against a single step of the scenario's horizon.
/// Transfers over pairs disconnected at that step mark the report infeasible
/// instead of throwing; used to replay a static plan over a trajectory.
LatencyReport evaluate_step(const Placement& placement, const Scenario& scenario,
                            std::size_t step, Method method = Method::kOuld);

PlanResult plan_ould(const Scenario& scenario, double time_limit_s = 60.0);
PlanResult plan_ould_mp(const Scenario& scenario, double time_limit_s = 60.0);
PlanResult plan_nearest(const Scenario& scenario);
PlanResult plan_hrm(const Scenario& scenario);
PlanResult plan_nearest_hrm(const Scenario& scenario);

PlanResult plan(const Scenario& scenario, Method method, double time_limit_s = 60.0);

/// Largest R <= r_max served with zero rejections; the template's origin list
/// must cover r_max requests. Linear scan from 1 (rejections are monotone).
std::size_t system_capacity(const Scenario& scenario_template, std::size_t r_max,
                            double time_limit_s = 60.0);

/// CSV `request,layer,uav` (1-based; uav 0 = rejected) plus a JSON summary.
void save_placement(const Placement& placement, std::ostream& out);
void save_summary_json(const Placement& placement, const LatencyReport& report, std::ostream& out);

}  // namespace uavplan

#endif  // UAVPLAN_PLANNER_HPP
