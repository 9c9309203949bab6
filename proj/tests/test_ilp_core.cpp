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
#include <cmath>
#include <random>

#include <doctest.h>

#include "test_util.hpp"
#include "uavplan/errors.hpp"

using namespace uavplan;
using namespace uavplan::testutil;

TEST_CASE("variable and row counts for N=2 M=2 R=1") {
  Scenario s = easy_scenario(2, 2, 1);
  IlpModel m = build_model(s, PlanMode::kOuld);
  CHECK(m.num_alpha() == 4);
  CHECK(m.num_gamma() == 2);
  std::size_t big_m_rows = 0;
  for (const LinearRow& row : m.rows)
    if (row.tag.rfind("bigM", 0) == 0) ++big_m_rows;
  CHECK(big_m_rows == 6);
  // N mem + N cpu + R*M assignment rows
  std::size_t other = m.rows.size() - big_m_rows;
  CHECK(other == 2 + 2 + 2);
}

TEST_CASE("disconnected pair gets its gammas fixed to zero") {
  Scenario s = easy_scenario(3, 3, 1);
  s.rates[0](0, 1) = 0.0;
  IlpModel m = build_model(s, PlanMode::kOuld);
  for (std::size_t j = 0; j + 1 < 3; ++j) {
    const std::size_t g = m.gamma_index(0, 0, 1, j);
    CHECK(std::find(m.fixed_zero.begin(), m.fixed_zero.end(), g) != m.fixed_zero.end());
  }
  // The reverse direction stays usable.
  const std::size_t g_rev = m.gamma_index(0, 1, 0, 0);
  CHECK(std::find(m.fixed_zero.begin(), m.fixed_zero.end(), g_rev) == m.fixed_zero.end());
}

TEST_CASE("infeasible-hint fires on aggregate memory shortfall") {
  Scenario s = easy_scenario(2, 3, 4);
  s.mem_budget.assign(2, 50);  // demand 4*60 = 240 > 100
  CHECK_THROWS_AS(build_model(s, PlanMode::kOuld), InfeasibleHintError);
}

TEST_CASE("horizon coefficients are per-step sums") {
  Scenario s = easy_scenario(2, 3, 1);
  s.rates = {s.rates[0], s.rates[0], s.rates[0]};
  IlpModel mp = build_model(s, PlanMode::kOuldMp);
  // identical matrices: every coefficient is exactly 3x the static one
  Scenario s1 = s;
  s1.rates = {s.rates[0]};
  IlpModel single = build_model(s1, PlanMode::kOuld);
  REQUIRE(mp.objective.size() == single.objective.size());
  for (std::size_t v = 0; v < mp.objective.size(); ++v)
    CHECK(mp.objective[v] == 3.0 * single.objective[v]);
}

TEST_CASE("big-M rows force gamma = alpha AND alpha") {
  // Exhaustive truth table over every big-M triple of a small model.
  Scenario s = easy_scenario(3, 3, 2);
  IlpModel m = build_model(s, PlanMode::kOuld);

  std::size_t triples = 0;
  for (std::size_t idx = 0; idx + 2 < m.rows.size(); ++idx) {
    if (m.rows[idx].tag.rfind("bigM_le_i", 0) != 0) continue;
    const LinearRow& le_i = m.rows[idx];
    const LinearRow& le_k = m.rows[idx + 1];
    const LinearRow& ge = m.rows[idx + 2];
    REQUIRE(le_k.tag.rfind("bigM_le_k", 0) == 0);
    REQUIRE(ge.tag.rfind("bigM_ge", 0) == 0);
    ++triples;

    for (int ai = 0; ai <= 1; ++ai)
      for (int ak = 0; ak <= 1; ++ak) {
        // The only gamma value satisfying all three rows must be ai AND ak.
        int valid_count = 0;
        int valid_gamma = -1;
        for (int gv = 0; gv <= 1; ++gv) {
          const double s1 = gv - ai;                 // gamma - alpha_i <= 0
          const double s2 = gv - ak;                 // gamma - alpha_k <= 0
          const double s3 = gv - ai - ak;            // gamma - a_i - a_k >= -1
          if (s1 <= le_i.upper && s2 <= le_k.upper && s3 >= ge.lower) {
            ++valid_count;
            valid_gamma = gv;
          }
        }
        CHECK(valid_count == 1);
        CHECK(valid_gamma == (ai & ak));
      }
  }
  CHECK(triples == 2 * 3 * 2 * 2);  // R * N * (N-1) * (M-1)
}

TEST_CASE("single UAV with ample budgets: zero objective") {
  Scenario s = easy_scenario(1, 4, 1);
  IlpModel m = build_model(s, PlanMode::kOuld);
  Placement p = solve_exact(m);
  CHECK(p.objective_value == 0.0);
  for (std::size_t j = 0; j < 4; ++j) CHECK(p.uav_of(0, j) == 0);
  check_placement(p, s);
}

TEST_CASE("tight memory forces a split matching the oracle") {
  Scenario s = easy_scenario(2, 3, 1);
  // layers are 10,20,30: cap each UAV at 40 so no one holds all 60.
  s.mem_budget.assign(2, 40);
  Placement exact = solve_exact(build_model(s, PlanMode::kOuld));
  Placement oracle = brute_force(s, PlanMode::kOuld);
  CHECK(exact.objective_value == oracle.objective_value);
  CHECK(exact.objective_value > 0.0);
  check_placement(exact, s);
}

TEST_CASE("infeasible when no layer fits anywhere") {
  Scenario s = easy_scenario(2, 3, 1);
  s.mem_budget.assign(2, 5);  // below the smallest layer (10)
  CHECK_THROWS_AS(
      [&] {
        try {
          solve_exact(build_model(s, PlanMode::kOuld));
        } catch (const InfeasibleHintError&) {
          throw InfeasibleError("hint");
        }
      }(),
      InfeasibleError);
}

TEST_CASE("brute force guard and degenerate cases") {
  Scenario big = easy_scenario(4, 6, 4);
  CHECK_THROWS_AS(brute_force(big, PlanMode::kOuld), TooLargeError);

  Scenario one = easy_scenario(1, 3, 1);
  Placement p = brute_force(one, PlanMode::kOuld);
  CHECK(p.objective_value == 0.0);
}

TEST_CASE("oracle equivalence on seeded random scenarios") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick_n(2, 3), pick_m(2, 4), pick_r(1, 2);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Scenario s = random_scenario(rng, pick_n(rng), pick_m(rng), pick_r(rng));
    Placement exact, oracle;
    bool exact_feasible = true, oracle_feasible = true;
    try {
      exact = solve_exact(build_model(s, PlanMode::kOuld), 30.0);
    } catch (const InfeasibleError&) {
      exact_feasible = false;
    } catch (const InfeasibleHintError&) {
      exact_feasible = false;
    }
    try {
      oracle = brute_force(s, PlanMode::kOuld);
    } catch (const InfeasibleError&) {
      oracle_feasible = false;
    }
    // The hint is a necessary condition, so it may only fire when the oracle
    // agrees the instance is infeasible.
    CHECK(exact_feasible == oracle_feasible);
    if (!exact_feasible) continue;
    ++solved;
    CHECK(exact.objective_value == oracle.objective_value);
    check_placement(exact, s);
    check_placement(oracle, s);
  }
  CHECK(solved > 20);
}

TEST_CASE("scaling all rates leaves the argmin unchanged") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Scenario s = random_scenario(rng, 3, 3, 1);
    Scenario scaled = s;
    const double factor = 4.0;  // power of two: exact division
    for (double& v : scaled.rates[0].rates) v *= factor;
    try {
      Placement base = solve_exact(build_model(s, PlanMode::kOuld));
      Placement up = solve_exact(build_model(scaled, PlanMode::kOuld));
      CHECK(up.objective_value == base.objective_value / factor);
      CHECK(up.assignment == base.assignment);
    } catch (const InfeasibleError&) {
    } catch (const InfeasibleHintError&) {
    }
  }
}

TEST_CASE("adding a request never reduces the objective") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    Scenario two = random_scenario(rng, 3, 3, 2);
    Scenario one = two.with_requests(1);
    try {
      Placement p2 = solve_exact(build_model(two, PlanMode::kOuld));
      Placement p1 = solve_exact(build_model(one, PlanMode::kOuld));
      CHECK(p2.objective_value >= p1.objective_value);
    } catch (const InfeasibleError&) {
    } catch (const InfeasibleHintError&) {
    }
  }
}

TEST_CASE("deterministic tie-breaking") {
  // Two symmetric off-origin targets: identical costs, the smaller index and
  // fewer distinct UAVs must win.
  Scenario s = easy_scenario(3, 2, 1);
  s.mem_budget = {20, 100, 100};  // origin can hold only layer 1 (10+20>20)
  Placement a = solve_exact(build_model(s, PlanMode::kOuld));
  Placement b = solve_exact(build_model(s, PlanMode::kOuld));
  CHECK(a.assignment == b.assignment);
  // layer 2 moved to the smallest-index UAV able to take it
  CHECK(a.uav_of(0, 1) == 1);
}

TEST_CASE("solver matches oracle on a mobility-horizon model") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Scenario s = random_scenario(rng, 3, 3, 1);
    Scenario mp = s;
    mp.rates = {s.rates[0], s.rates[0], s.rates[0]};
    try {
      Placement exact = solve_exact(build_model(mp, PlanMode::kOuldMp));
      Placement oracle = brute_force(mp, PlanMode::kOuldMp);
      CHECK(exact.objective_value == oracle.objective_value);
    } catch (const InfeasibleError&) {
    } catch (const InfeasibleHintError&) {
    }
  }
}
