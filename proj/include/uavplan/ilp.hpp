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

#ifndef UAVPLAN_ILP_HPP
#define UAVPLAN_ILP_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "uavplan/scenario.hpp"

namespace uavplan {

enum class PlanMode { kOuld, kOuldMp };

/// A solved layer assignment. `assignment[r*M+j]` holds the UAV executing
/// layer j of request r, or kRejected when the request was dropped. The
/// binary tensors of the formulation are exposed through alpha()/gamma().
struct Placement {
  static constexpr int kRejected = -1;

  std::size_t num_uavs = 0;
  std::size_t num_layers = 0;
  std::size_t num_requests = 0;
  std::vector<int> assignment;
  double objective_value = 0;  // seconds; communication only
  bool optimal = true;
  double solve_time_s = 0;

  int uav_of(std::size_t r, std::size_t j) const { return assignment[r * num_layers + j]; }
  bool rejected(std::size_t r) const { return uav_of(r, 0) == kRejected; }
  bool alpha(std::size_t r, std::size_t i, std::size_t j) const {
    return uav_of(r, j) == static_cast<int>(i);
  }
  // Transfer indicator: layer j's output moves from UAV i to UAV k.
  bool gamma(std::size_t r, std::size_t i, std::size_t k, std::size_t j) const {
    return alpha(r, i, j) && alpha(r, k, j + 1);
  }
};

struct LinearTerm {
  std::size_t var = 0;
  double coef = 0;
};

/// lower <= sum(terms) <= upper.
struct LinearRow {
  std::vector<LinearTerm> terms;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::string tag;
};

/// The linearized placement model. Variable ids: the R*N*M alpha binaries
/// first, then the R*N*(N-1)*(M-1) usable gamma binaries (i != k).
/// Alongside the generic rows it carries the structured cost tables the
/// branch-and-bound solver walks; both views are built from the same
/// coefficients.
struct IlpModel {
  std::size_t n = 0, m = 0, r = 0;
  PlanMode mode = PlanMode::kOuld;

  std::size_t num_alpha() const { return r * n * m; }
  std::size_t num_gamma() const { return r * n * (n - 1) * (m - 1); }
  std::size_t num_vars() const { return num_alpha() + num_gamma(); }

  std::size_t alpha_index(std::size_t req, std::size_t i, std::size_t j) const {
    return (req * n + i) * m + j;
  }
  // i != k, j in [0, m-2] meaning the j -> j+1 hop.
  std::size_t gamma_index(std::size_t req, std::size_t i, std::size_t k, std::size_t j) const;

  std::vector<double> objective;          // per variable id
  std::vector<LinearRow> rows;            // memory, compute, assignment, big-M
  std::vector<std::size_t> fixed_zero;    // gamma vars pinned to 0 (dead links)

  // Structured view used by the solver.
  std::vector<std::size_t> origins;                        // per request
  std::vector<std::int64_t> layer_mem;                     // per layer
  std::vector<double> layer_flops;                         // per layer
  std::vector<std::int64_t> mem_budget;                    // per UAV
  std::vector<double> compute_budget;                      // per UAV
  std::vector<std::vector<double>> source_cost;            // [r][k]; inf = dead link
  std::vector<std::vector<std::vector<double>>> hop_cost;  // [j][i][k]; inf = dead link
};

/// Emits objective coefficients and the constraint rows of the linearized
/// formulation. Gamma coefficients are 8*K_j/rho (bits over bits/s), summed
/// over the horizon for kOuldMp; the source hop contributes 8*K_s/rho on the
/// alpha of layer 1 for every UAV other than the origin. Pairs disconnected
/// at any step get their gamma fixed to zero.
IlpModel build_model(const Scenario& scenario, PlanMode mode);

/// Depth-first branch and bound over the alpha binaries. Returns a provably
/// optimal placement, or the best incumbent with optimal=false when the time
/// limit is hit. Ties are broken toward fewer distinct UAVs, then the
/// lexicographically smallest assignment.
Placement solve_exact(const IlpModel& model, double time_limit_s = 60.0);

/// Exhaustive oracle for tiny instances (guard: N^(M*R) <= 1e7). Evaluates
/// the objective directly from the scenario; ties broken by lexicographically
/// smallest assignment.
Placement brute_force(const Scenario& scenario, PlanMode mode);

/// Throws InfeasiblePlacementError naming the violated constraint; rejected
/// requests are skipped.
void check_placement(const Placement& placement, const Scenario& scenario);

}  // namespace uavplan

#endif  // UAVPLAN_ILP_HPP
