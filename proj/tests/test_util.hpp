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

#ifndef UAVPLAN_TESTS_TEST_UTIL_HPP
#define UAVPLAN_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "uavplan/scenario.hpp"

namespace uavplan::testutil {

// Tiny synthetic profile: layer j has mem 10*(j+1), flops 100*(j+1),
// output 1000*(j+1) bytes.
inline CnnProfile tiny_profile(std::size_t m) {
  CnnProfile p;
  p.model_name = "tiny";
  p.input_bytes = 5000;
  for (std::size_t j = 0; j < m; ++j)
    p.layers.push_back({static_cast<int>(j) + 1, "l" + std::to_string(j + 1),
                        static_cast<std::int64_t>(10 * (j + 1)),
                        static_cast<std::int64_t>(100 * (j + 1)),
                        static_cast<std::int64_t>(1000 * (j + 1))});
  return p;
}

inline RateMatrix full_rate_matrix(std::size_t n, double rate) {
  RateMatrix rm(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k) rm(i, k) = rate;
  return rm;
}

// Homogeneous fully-connected scenario with generous budgets.
inline Scenario easy_scenario(std::size_t n, std::size_t m, std::size_t r,
                              double rate = 1e6) {
  Scenario s;
  s.profile = tiny_profile(m);
  s.n = n;
  s.mem_budget.assign(n, 1'000'000);
  s.compute_budget.assign(n, 1e9);
  s.compute_rate.assign(n, 1e9);
  for (std::size_t i = 0; i < r; ++i) s.request_origins.push_back(i % n);
  s.rates = {full_rate_matrix(n, rate)};
  return s;
}

// Seeded random scenario in the oracle-equivalence regime: random rates
// (some links dead), random budgets that are usually but not always ample.
inline Scenario random_scenario(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                std::size_t r) {
  Scenario s;
  s.profile = tiny_profile(m);
  s.n = n;
  std::uniform_int_distribution<std::int64_t> mem(20, 10 * static_cast<std::int64_t>(m) * 12);
  std::uniform_real_distribution<double> rate(1e4, 1e7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> origin(0, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    s.mem_budget.push_back(mem(rng));
    s.compute_budget.push_back(1e9);
    s.compute_rate.push_back(1e9);
  }
  for (std::size_t i = 0; i < r; ++i) s.request_origins.push_back(origin(rng));
  RateMatrix rm(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k) rm(i, k) = (unit(rng) < 0.15) ? 0.0 : rate(rng);
  s.rates = {rm};
  return s;
}

}  // namespace uavplan::testutil

#endif  // UAVPLAN_TESTS_TEST_UTIL_HPP
