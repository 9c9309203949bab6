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

#include "uavplan/ilp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "uavplan/errors.hpp"

namespace uavplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One transfer of `bytes` over the link (i,k), summed over the horizon.
// Infinite when the pair is disconnected at any step. Bytes-to-bits
// conversion (x8) happens here and nowhere else on the solver path.
double link_seconds(const Scenario& s, std::size_t i, std::size_t k, std::int64_t bytes) {
  double total = 0;
  for (const RateMatrix& rm : s.rates) {
    const double rho = rm(i, k);
    if (rho <= 0) return kInf;
    total += 8.0 * static_cast<double>(bytes) / rho;
  }
  return total;
}

}  // namespace

std::size_t IlpModel::gamma_index(std::size_t req, std::size_t i, std::size_t k,
                                  std::size_t j) const {
  const std::size_t kk = (k > i) ? k - 1 : k;  // index among the n-1 targets != i
  return num_alpha() + ((req * n + i) * (n - 1) + kk) * (m - 1) + j;
}

IlpModel build_model(const Scenario& scenario, PlanMode mode) {
  scenario.validate();
  if (mode == PlanMode::kOuld && scenario.num_steps() != 1)
    throw ValidationError("build_model: static mode requires exactly one rate matrix");

  const std::size_t N = scenario.n;
  const std::size_t M = scenario.num_layers();
  const std::size_t R = scenario.num_requests();

  IlpModel model;
  model.n = N;
  model.m = M;
  model.r = R;
  model.mode = mode;
  model.origins = scenario.request_origins;
  model.mem_budget = scenario.mem_budget;
  model.compute_budget = scenario.compute_budget;
  for (const LayerSpec& l : scenario.profile.layers) {
    model.layer_mem.push_back(l.mem_bytes);
    model.layer_flops.push_back(static_cast<double>(l.flops));
  }

  // Quick necessary condition: aggregate memory demand vs aggregate budget.
  std::int64_t demand = 0, capacity = 0;
  for (std::int64_t m_j : model.layer_mem) demand += m_j;
  demand *= static_cast<std::int64_t>(R);
  for (std::int64_t b : model.mem_budget) capacity += b;
  if (demand > capacity)
    throw InfeasibleHintError("total memory demand " + std::to_string(demand) +
                              " B exceeds aggregate budget " + std::to_string(capacity) + " B");

  model.objective.assign(model.num_vars(), 0.0);

  // Source hop: 8*K_s/rho(origin,k) on alpha(r,k,1) for every k != origin.
  model.source_cost.assign(R, std::vector<double>(N, 0.0));
  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t o = model.origins[r];
    for (std::size_t k = 0; k < N; ++k) {
      if (k == o) continue;
      const double c = link_seconds(scenario, o, k, scenario.profile.input_bytes);
      model.source_cost[r][k] = c;
      if (std::isinf(c)) {
        model.fixed_zero.push_back(model.alpha_index(r, k, 0));
      } else {
        model.objective[model.alpha_index(r, k, 0)] = c;
      }
    }
  }

  // Inter-layer hops: 8*K_j/rho(i,k) on gamma(r,i,k,j).
  if (M >= 2) {
    model.hop_cost.assign(M - 1, std::vector<std::vector<double>>(N, std::vector<double>(N, 0.0)));
    for (std::size_t j = 0; j + 1 < M; ++j)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
          if (i == k) continue;
          const double c = link_seconds(scenario, i, k, scenario.profile.layers[j].output_bytes);
          model.hop_cost[j][i][k] = c;
          for (std::size_t r = 0; r < R; ++r) {
            const std::size_t g = model.gamma_index(r, i, k, j);
            if (std::isinf(c))
              model.fixed_zero.push_back(g);
            else
              model.objective[g] = c;
          }
        }
  }

  // Eq-style rows: per-UAV memory and compute, one-UAV-per-layer, big-M triples.
  for (std::size_t i = 0; i < N; ++i) {
    LinearRow mem_row, cpu_row;
    mem_row.tag = "mem[" + std::to_string(i + 1) + "]";
    cpu_row.tag = "cpu[" + std::to_string(i + 1) + "]";
    mem_row.upper = static_cast<double>(model.mem_budget[i]);
    cpu_row.upper = model.compute_budget[i];
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t j = 0; j < M; ++j) {
        mem_row.terms.push_back({model.alpha_index(r, i, j),
                                 static_cast<double>(model.layer_mem[j])});
        cpu_row.terms.push_back({model.alpha_index(r, i, j), model.layer_flops[j]});
      }
    model.rows.push_back(std::move(mem_row));
    model.rows.push_back(std::move(cpu_row));
  }
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t j = 0; j < M; ++j) {
      LinearRow row;
      row.tag = "assign[" + std::to_string(r + 1) + "][" + std::to_string(j + 1) + "]";
      row.lower = row.upper = 1.0;
      for (std::size_t i = 0; i < N; ++i) row.terms.push_back({model.alpha_index(r, i, j), 1.0});
      model.rows.push_back(std::move(row));
    }
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (i == k) continue;
        for (std::size_t j = 0; j + 1 < M; ++j) {
          const std::size_t g = model.gamma_index(r, i, k, j);
          const std::size_t ai = model.alpha_index(r, i, j);
          const std::size_t ak = model.alpha_index(r, k, j + 1);
          const std::string suffix = "[" + std::to_string(r + 1) + "][" + std::to_string(i + 1) +
                                     "][" + std::to_string(k + 1) + "][" + std::to_string(j + 1) +
                                     "]";
          LinearRow le_i, le_k, ge;
          le_i.tag = "bigM_le_i" + suffix;
          le_i.terms = {{g, 1.0}, {ai, -1.0}};
          le_i.upper = 0.0;
          le_k.tag = "bigM_le_k" + suffix;
          le_k.terms = {{g, 1.0}, {ak, -1.0}};
          le_k.upper = 0.0;
          ge.tag = "bigM_ge" + suffix;
          ge.terms = {{g, 1.0}, {ai, -1.0}, {ak, -1.0}};
          ge.lower = -1.0;
          model.rows.push_back(std::move(le_i));
          model.rows.push_back(std::move(le_k));
          model.rows.push_back(std::move(ge));
        }
      }

  return model;
}

namespace {

// Objective of a full assignment, accumulated in the canonical order
// (per request: source hop, then hops j=1..M-1). Branch and bound adds the
// same terms in the same order, so partial costs are exact prefixes.
double assignment_cost(const IlpModel& model, const std::vector<int>& a) {
  double total = 0;
  for (std::size_t r = 0; r < model.r; ++r) {
    const std::size_t base = r * model.m;
    const int first = a[base];
    if (first != static_cast<int>(model.origins[r]))
      total += model.source_cost[r][static_cast<std::size_t>(first)];
    for (std::size_t j = 0; j + 1 < model.m; ++j) {
      const int from = a[base + j];
      const int to = a[base + j + 1];
      if (from != to)
        total += model.hop_cost[j][static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
    }
  }
  return total;
}

int distinct_uavs(const std::vector<int>& a) {
  std::vector<int> sorted(a);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<int>(sorted.size());
}

class BranchAndBound {
 public:
  BranchAndBound(const IlpModel& model, double time_limit_s)
      : model_(model),
        positions_(model.r * model.m),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_limit_s))) {
    a_.assign(positions_, -1);
    res_mem_ = model.mem_budget;
    res_cpu_ = model.compute_budget;
    for (std::int64_t b : res_mem_) total_res_mem_ += b;
    for (double b : res_cpu_) total_res_cpu_ += b;

    suffix_mem_.assign(positions_ + 1, 0);
    suffix_cpu_.assign(positions_ + 1, 0.0);
    for (std::size_t pos = positions_; pos-- > 0;) {
      const std::size_t j = pos % model.m;
      suffix_mem_[pos] = suffix_mem_[pos + 1] + model.layer_mem[j];
      suffix_cpu_[pos] = suffix_cpu_[pos + 1] + model.layer_flops[j];
    }
  }

  Placement run() {
    dfs(0, 0.0);
    if (!found_) {
      if (timed_out_) throw TimeoutError("solve_exact: time limit hit with no incumbent");
      throw InfeasibleError("no layer assignment satisfies the budget and link constraints");
    }
    Placement p;
    p.num_uavs = model_.n;
    p.num_layers = model_.m;
    p.num_requests = model_.r;
    p.assignment = best_;
    p.objective_value = best_cost_;
    p.optimal = !timed_out_;
    return p;
  }

 private:
  void dfs(std::size_t pos, double partial) {
    if (timed_out_) return;
    if (++nodes_ % 8192 == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (pos == positions_) {
      accept_leaf(partial);
      return;
    }
    const std::size_t r = pos / model_.m;
    const std::size_t j = pos % model_.m;
    const std::int64_t mem_j = model_.layer_mem[j];
    const double cpu_j = model_.layer_flops[j];

    // Candidate UAVs ordered by added cost, then index, so the first leaf is
    // already a good incumbent.
    struct Cand {
      double delta;
      int uav;
    };
    std::vector<Cand> cands;
    cands.reserve(model_.n);
    for (std::size_t i = 0; i < model_.n; ++i) {
      double delta;
      if (j == 0) {
        delta = (i == model_.origins[r]) ? 0.0 : model_.source_cost[r][i];
      } else {
        const std::size_t prev = static_cast<std::size_t>(a_[pos - 1]);
        delta = (i == prev) ? 0.0 : model_.hop_cost[j - 1][prev][i];
      }
      if (std::isinf(delta)) continue;
      if (res_mem_[i] < mem_j || res_cpu_[i] < cpu_j) continue;
      cands.push_back({delta, static_cast<int>(i)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.delta != b.delta ? a.delta < b.delta : a.uav < b.uav;
    });

    for (const Cand& c : cands) {
      const double cost = partial + c.delta;
      if (found_ && cost > best_cost_) break;  // candidates are cost-sorted
      const std::size_t i = static_cast<std::size_t>(c.uav);
      // Aggregate bound: the remaining layers must fit in the remaining
      // residual capacity somewhere.
      if (suffix_mem_[pos + 1] > total_res_mem_ - mem_j) continue;
      if (suffix_cpu_[pos + 1] > total_res_cpu_ - cpu_j) continue;

      a_[pos] = c.uav;
      res_mem_[i] -= mem_j;
      res_cpu_[i] -= cpu_j;
      total_res_mem_ -= mem_j;
      total_res_cpu_ -= cpu_j;
      dfs(pos + 1, cost);
      res_mem_[i] += mem_j;
      res_cpu_[i] += cpu_j;
      total_res_mem_ += mem_j;
      total_res_cpu_ += cpu_j;
      a_[pos] = -1;
      if (timed_out_) return;
    }
  }

  void accept_leaf(double cost) {
    if (!found_ || cost < best_cost_) {
      found_ = true;
      best_cost_ = cost;
      best_ = a_;
      return;
    }
    if (cost > best_cost_) return;
    const int nd_new = distinct_uavs(a_);
    const int nd_best = distinct_uavs(best_);
    if (nd_new < nd_best || (nd_new == nd_best && a_ < best_)) best_ = a_;
  }

  const IlpModel& model_;
  const std::size_t positions_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<int> a_;
  std::vector<std::int64_t> res_mem_;
  std::vector<double> res_cpu_;
  std::int64_t total_res_mem_ = 0;
  double total_res_cpu_ = 0;
  std::vector<std::int64_t> suffix_mem_;
  std::vector<double> suffix_cpu_;
  std::vector<int> best_;
  double best_cost_ = kInf;
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Placement solve_exact(const IlpModel& model, double time_limit_s) {
  const auto start = std::chrono::steady_clock::now();
  BranchAndBound bb(model, time_limit_s);
  Placement p = bb.run();
  p.solve_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // The incremental cost is the canonical prefix sum; keep the recompute as a
  // consistency guard.
  p.objective_value = assignment_cost(model, p.assignment);
  return p;
}

Placement brute_force(const Scenario& scenario, PlanMode mode) {
  scenario.validate();
  const std::size_t N = scenario.n;
  const std::size_t M = scenario.num_layers();
  const std::size_t R = scenario.num_requests();
  const std::size_t P = M * R;
  if (std::pow(static_cast<double>(N), static_cast<double>(P)) > 1e7)
    throw TooLargeError("brute_force: N^(M*R) exceeds the enumeration guard");

  std::vector<int> a(P, 0);
  std::vector<int> best;
  double best_cost = kInf;
  bool found = false;

  const auto feasible_cost = [&](const std::vector<int>& asg, double& cost_out) {
    // Budgets (Eq. 4/5 style).
    std::vector<std::int64_t> mem(N, 0);
    std::vector<double> cpu(N, 0.0);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t j = 0; j < M; ++j) {
        const std::size_t i = static_cast<std::size_t>(asg[r * M + j]);
        mem[i] += scenario.profile.layers[j].mem_bytes;
        cpu[i] += static_cast<double>(scenario.profile.layers[j].flops);
      }
    for (std::size_t i = 0; i < N; ++i)
      if (mem[i] > scenario.mem_budget[i] || cpu[i] > scenario.compute_budget[i]) return false;

    // Objective, straight from the formulation; canonical term order.
    double total = 0;
    for (std::size_t r = 0; r < R; ++r) {
      const std::size_t o = scenario.request_origins[r];
      const std::size_t first = static_cast<std::size_t>(asg[r * M]);
      if (first != o) {
        const double c = link_seconds(scenario, o, first, scenario.profile.input_bytes);
        if (std::isinf(c)) return false;
        total += c;
      }
      for (std::size_t j = 0; j + 1 < M; ++j) {
        const std::size_t from = static_cast<std::size_t>(asg[r * M + j]);
        const std::size_t to = static_cast<std::size_t>(asg[r * M + j + 1]);
        if (from != to) {
          const double c = link_seconds(scenario, from, to,
                                        scenario.profile.layers[j].output_bytes);
          if (std::isinf(c)) return false;
          total += c;
        }
      }
    }
    cost_out = total;
    return true;
  };

  (void)mode;  // the horizon is encoded in scenario.rates for both modes
  while (true) {
    double cost = 0;
    if (feasible_cost(a, cost) && (!found || cost < best_cost)) {
      // Strict < keeps the lexicographically smallest optimum (enumeration
      // is in ascending assignment order).
      found = true;
      best_cost = cost;
      best = a;
    }
    // Odometer increment, last position fastest.
    std::size_t pos = P;
    while (pos-- > 0) {
      if (++a[pos] < static_cast<int>(N)) break;
      a[pos] = 0;
      if (pos == 0) goto done;
    }
  }
done:
  if (!found) throw InfeasibleError("brute_force: no feasible assignment");

  Placement p;
  p.num_uavs = N;
  p.num_layers = M;
  p.num_requests = R;
  p.assignment = best;
  p.objective_value = best_cost;
  return p;
}

void check_placement(const Placement& placement, const Scenario& scenario) {
  const std::size_t N = scenario.n;
  const std::size_t M = scenario.num_layers();
  const std::size_t R = scenario.num_requests();
  if (placement.num_uavs != N || placement.num_layers != M || placement.num_requests != R ||
      placement.assignment.size() != R * M)
    throw InfeasiblePlacementError("placement shape does not match the scenario");

  std::vector<std::int64_t> mem(N, 0);
  std::vector<double> cpu(N, 0.0);
  for (std::size_t r = 0; r < R; ++r) {
    const bool rej = placement.rejected(r);
    for (std::size_t j = 0; j < M; ++j) {
      const int u = placement.uav_of(r, j);
      if (rej) {
        if (u != Placement::kRejected)
          throw InfeasiblePlacementError("request " + std::to_string(r + 1) +
                                         " is partially rejected");
        continue;
      }
      if (u < 0 || u >= static_cast<int>(N))
        throw InfeasiblePlacementError("assignment constraint violated: layer " +
                                       std::to_string(j + 1) + " of request " +
                                       std::to_string(r + 1) + " has no UAV");
      mem[static_cast<std::size_t>(u)] += scenario.profile.layers[j].mem_bytes;
      cpu[static_cast<std::size_t>(u)] += static_cast<double>(scenario.profile.layers[j].flops);
    }
    if (rej) continue;

    const std::size_t o = scenario.request_origins[r];
    const std::size_t first = static_cast<std::size_t>(placement.uav_of(r, 0));
    for (std::size_t t = 0; t < scenario.num_steps(); ++t) {
      if (first != o && scenario.rates[t](o, first) <= 0)
        throw InfeasiblePlacementError("source hop of request " + std::to_string(r + 1) +
                                       " uses disconnected pair (" + std::to_string(o + 1) + "," +
                                       std::to_string(first + 1) + ") at step " +
                                       std::to_string(t + 1));
      for (std::size_t j = 0; j + 1 < M; ++j) {
        const std::size_t from = static_cast<std::size_t>(placement.uav_of(r, j));
        const std::size_t to = static_cast<std::size_t>(placement.uav_of(r, j + 1));
        if (from != to && scenario.rates[t](from, to) <= 0)
          throw InfeasiblePlacementError(
              "transfer of layer " + std::to_string(j + 1) + " output of request " +
              std::to_string(r + 1) + " uses disconnected pair (" + std::to_string(from + 1) +
              "," + std::to_string(to + 1) + ") at step " + std::to_string(t + 1));
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (mem[i] > scenario.mem_budget[i])
      throw InfeasiblePlacementError("memory constraint violated on UAV " + std::to_string(i + 1));
    if (cpu[i] > scenario.compute_budget[i])
      throw InfeasiblePlacementError("compute constraint violated on UAV " + std::to_string(i + 1));
  }
}

}  // namespace uavplan
