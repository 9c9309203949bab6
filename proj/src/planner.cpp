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

#include "uavplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "uavplan/errors.hpp"

namespace uavplan {

std::string method_name(Method method) {
  switch (method) {
    case Method::kOuld: return "ould";
    case Method::kOuldMp: return "ould_mp";
    case Method::kNearest: return "nearest";
    case Method::kHrm: return "hrm";
    case Method::kNearestHrm: return "nearest_hrm";
  }
  return "?";
}

namespace {

// Evaluator-side transfer time; deliberately re-stated rather than shared
// with the model builder so the two code paths stay independent.
double transfer_seconds(std::int64_t bytes, double rate_bps) {
  return 8.0 * static_cast<double>(bytes) / rate_bps;
}

LatencyReport finalize(LatencyReport report) {
  double total = 0;
  std::size_t accepted = 0;
  for (const RequestLatency& rl : report.per_request) {
    if (!rl.accepted) continue;
    total += rl.total_seconds;
    ++accepted;
  }
  report.avg_latency_per_request = accepted ? total / static_cast<double>(accepted) : 0.0;
  return report;
}

}  // namespace

LatencyReport evaluate(const Placement& placement, const Scenario& scenario, Method method) {
  check_placement(placement, scenario);

  LatencyReport report;
  report.method = method;
  const std::size_t M = scenario.num_layers();
  for (std::size_t r = 0; r < scenario.num_requests(); ++r) {
    RequestLatency rl;
    if (placement.rejected(r)) {
      rl.accepted = false;
      ++report.rejected_requests;
      report.per_request.push_back(rl);
      continue;
    }
    const std::size_t o = scenario.request_origins[r];
    const std::size_t first = static_cast<std::size_t>(placement.uav_of(r, 0));
    if (first != o) {
      report.shared_data_bytes += scenario.profile.input_bytes;
      for (const RateMatrix& rm : scenario.rates)
        rl.comm_seconds += transfer_seconds(scenario.profile.input_bytes, rm(o, first));
    }
    for (std::size_t j = 0; j + 1 < M; ++j) {
      const std::size_t from = static_cast<std::size_t>(placement.uav_of(r, j));
      const std::size_t to = static_cast<std::size_t>(placement.uav_of(r, j + 1));
      if (from == to) continue;
      report.shared_data_bytes += scenario.profile.layers[j].output_bytes;
      for (const RateMatrix& rm : scenario.rates)
        rl.comm_seconds += transfer_seconds(scenario.profile.layers[j].output_bytes, rm(from, to));
    }
    for (std::size_t j = 0; j < M; ++j) {
      const std::size_t u = static_cast<std::size_t>(placement.uav_of(r, j));
      rl.comp_seconds +=
          static_cast<double>(scenario.profile.layers[j].flops) / scenario.compute_rate[u];
    }
    rl.total_seconds = rl.comm_seconds + rl.comp_seconds;
    report.comm_seconds += rl.comm_seconds;
    report.comp_seconds += rl.comp_seconds;
    report.per_request.push_back(rl);
  }
  return finalize(report);
}

LatencyReport evaluate_step(const Placement& placement, const Scenario& scenario,
                            std::size_t step, Method method) {
  Scenario single = scenario;
  single.rates = {scenario.rates.at(step)};
  try {
    return evaluate(placement, single, method);
  } catch (const InfeasiblePlacementError& e) {
    LatencyReport report;
    report.method = method;
    report.feasible = false;
    report.note = e.what();
    return report;
  }
}

namespace {

Placement all_rejected(const Scenario& scenario) {
  Placement p;
  p.num_uavs = scenario.n;
  p.num_layers = scenario.num_layers();
  p.num_requests = scenario.num_requests();
  p.assignment.assign(p.num_requests * p.num_layers, Placement::kRejected);
  return p;
}

// Solves with the first `keep` requests and pads the remaining rows as
// rejected.
Placement solve_subset(const Scenario& scenario, PlanMode mode, std::size_t keep,
                       double time_limit_s) {
  if (keep == 0) return all_rejected(scenario);
  const Scenario sub = scenario.with_requests(keep);
  IlpModel model = build_model(sub, mode);
  Placement p = solve_exact(model, time_limit_s);
  p.num_requests = scenario.num_requests();
  p.assignment.resize(p.num_requests * p.num_layers, Placement::kRejected);
  return p;
}

PlanResult plan_optimal(const Scenario& scenario, PlanMode mode, double time_limit_s) {
  scenario.validate();
  const Method method = (mode == PlanMode::kOuld) ? Method::kOuld : Method::kOuldMp;

  Placement placement;
  bool solved = false;
  // Capacity semantics: over-capacity requests are rejected latest-first.
  for (std::size_t keep = scenario.num_requests() + 1; keep-- > 0;) {
    try {
      placement = solve_subset(scenario, mode, keep, time_limit_s);
      solved = true;
      break;
    } catch (const InfeasibleError&) {
    } catch (const InfeasibleHintError&) {
    }
  }
  if (!solved) placement = all_rejected(scenario);

  PlanResult result;
  result.report = evaluate(placement, scenario, method);

  // The evaluator is the solver's cross-check: the recomputed communication
  // total must reproduce the objective.
  const double diff = std::abs(result.report.comm_seconds - placement.objective_value);
  if (diff > 1e-9 * std::max(1.0, std::abs(placement.objective_value)))
    throw std::logic_error("solver objective and evaluator disagree by " + std::to_string(diff));

  if (mode == PlanMode::kOuldMp)
    for (std::size_t t = 0; t < scenario.num_steps(); ++t)
      result.per_step.push_back(evaluate_step(placement, scenario, t, method));

  result.placement = std::move(placement);
  return result;
}

struct HeuristicState {
  std::vector<std::int64_t> residual_mem;
  std::vector<double> residual_cpu;
};

// Picks the handoff target among `cands` (indices into the swarm).
int select_target(Method method, const std::vector<std::size_t>& cands,
                  const HeuristicState& st, const RateMatrix& rho, std::size_t holder) {
  auto nearest_of = [&](const std::vector<std::size_t>& set) {
    std::size_t best = set[0];
    for (std::size_t k : set)
      if (rho(holder, k) > rho(holder, best)) best = k;
    return static_cast<int>(best);
  };
  switch (method) {
    case Method::kNearest:
      return nearest_of(cands);
    case Method::kHrm: {
      std::size_t best = cands[0];
      for (std::size_t k : cands) {
        if (st.residual_mem[k] > st.residual_mem[best] ||
            (st.residual_mem[k] == st.residual_mem[best] && rho(holder, k) > rho(holder, best)))
          best = k;
      }
      return static_cast<int>(best);
    }
    case Method::kNearestHrm: {
      // Threshold at the (lower) median residual memory of the candidates,
      // then nearest among those passing it.
      std::vector<std::int64_t> residuals;
      for (std::size_t k : cands) residuals.push_back(st.residual_mem[k]);
      std::sort(residuals.begin(), residuals.end());
      const std::int64_t threshold = residuals[(residuals.size() - 1) / 2];
      std::vector<std::size_t> passing;
      for (std::size_t k : cands)
        if (st.residual_mem[k] >= threshold) passing.push_back(k);
      return nearest_of(passing);
    }
    default:
      throw std::logic_error("select_target: not a heuristic method");
  }
}

PlanResult plan_heuristic(const Scenario& scenario, Method method) {
  scenario.validate();
  const std::size_t N = scenario.n;
  const std::size_t M = scenario.num_layers();
  const RateMatrix& rho = scenario.rates[0];

  HeuristicState st;
  st.residual_mem = scenario.mem_budget;
  st.residual_cpu = scenario.compute_budget;

  Placement placement = all_rejected(scenario);
  for (std::size_t r = 0; r < scenario.num_requests(); ++r) {
    std::vector<int> row(M, Placement::kRejected);
    HeuristicState saved = st;
    std::size_t holder = scenario.request_origins[r];
    bool ok = true;
    for (std::size_t j = 0; j < M; ++j) {
      const std::int64_t mem_j = scenario.profile.layers[j].mem_bytes;
      const double cpu_j = static_cast<double>(scenario.profile.layers[j].flops);
      if (st.residual_mem[holder] < mem_j || st.residual_cpu[holder] < cpu_j) {
        std::vector<std::size_t> cands;
        for (std::size_t k = 0; k < N; ++k) {
          if (k == holder || rho(holder, k) <= 0) continue;  // neighbors only
          if (st.residual_mem[k] < mem_j || st.residual_cpu[k] < cpu_j) continue;
          cands.push_back(k);
        }
        if (cands.empty()) {
          ok = false;
          break;
        }
        holder = static_cast<std::size_t>(select_target(method, cands, st, rho, holder));
      }
      row[j] = static_cast<int>(holder);
      st.residual_mem[holder] -= mem_j;
      st.residual_cpu[holder] -= cpu_j;
    }
    if (!ok) {
      st = saved;  // free whatever this request had reserved
      continue;
    }
    for (std::size_t j = 0; j < M; ++j) placement.assignment[r * M + j] = row[j];
  }

  PlanResult result;
  result.report = evaluate(placement, scenario, method);
  result.placement = std::move(placement);
  return result;
}

}  // namespace

PlanResult plan_ould(const Scenario& scenario, double time_limit_s) {
  if (scenario.num_steps() != 1)
    throw ValidationError("plan_ould: scenario must carry a single rate matrix");
  return plan_optimal(scenario, PlanMode::kOuld, time_limit_s);
}

PlanResult plan_ould_mp(const Scenario& scenario, double time_limit_s) {
  return plan_optimal(scenario, PlanMode::kOuldMp, time_limit_s);
}

PlanResult plan_nearest(const Scenario& scenario) {
  return plan_heuristic(scenario, Method::kNearest);
}

PlanResult plan_hrm(const Scenario& scenario) { return plan_heuristic(scenario, Method::kHrm); }

PlanResult plan_nearest_hrm(const Scenario& scenario) {
  return plan_heuristic(scenario, Method::kNearestHrm);
}

PlanResult plan(const Scenario& scenario, Method method, double time_limit_s) {
  switch (method) {
    case Method::kOuld: return plan_ould(scenario, time_limit_s);
    case Method::kOuldMp: return plan_ould_mp(scenario, time_limit_s);
    default: return plan_heuristic(scenario, method);
  }
}

std::size_t system_capacity(const Scenario& scenario_template, std::size_t r_max,
                            double time_limit_s) {
  if (r_max < 1) throw ValidationError("system_capacity: r_max must be >= 1");
  if (scenario_template.num_requests() < r_max)
    throw ValidationError("system_capacity: template must provide r_max request origins");
  const bool mobile = scenario_template.num_steps() > 1;
  std::size_t capacity = 0;
  for (std::size_t r = 1; r <= r_max; ++r) {
    const Scenario sub = scenario_template.with_requests(r);
    const PlanResult res =
        mobile ? plan_ould_mp(sub, time_limit_s) : plan_ould(sub, time_limit_s);
    if (res.report.rejected_requests > 0) break;  // rejections are monotone in R
    capacity = r;
  }
  return capacity;
}

void save_placement(const Placement& placement, std::ostream& out) {
  out << "request,layer,uav\n";
  for (std::size_t r = 0; r < placement.num_requests; ++r)
    for (std::size_t j = 0; j < placement.num_layers; ++j) {
      const int u = placement.uav_of(r, j);
      out << (r + 1) << "," << (j + 1) << "," << (u == Placement::kRejected ? 0 : u + 1) << "\n";
    }
}

void save_summary_json(const Placement& placement, const LatencyReport& report,
                       std::ostream& out) {
  nlohmann::json j;
  j["method"] = method_name(report.method);
  j["objective_seconds"] = placement.objective_value;
  j["optimal"] = placement.optimal;
  j["solve_time_s"] = placement.solve_time_s;
  j["avg_latency_per_request_s"] = report.avg_latency_per_request;
  j["comm_seconds"] = report.comm_seconds;
  j["comp_seconds"] = report.comp_seconds;
  j["shared_data_bytes"] = report.shared_data_bytes;
  j["rejected_requests"] = report.rejected_requests;
  j["requests"] = placement.num_requests;
  j["uavs"] = placement.num_uavs;
  j["layers"] = placement.num_layers;
  out << j.dump(2) << "\n";
}

}  // namespace uavplan
