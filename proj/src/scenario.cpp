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

#include "uavplan/scenario.hpp"

#include <string>

#include "uavplan/errors.hpp"

namespace uavplan {

void Scenario::validate() const {
  profile.validate();
  if (n < 1) throw ValidationError("scenario: need at least one UAV");
  if (mem_budget.size() != n || compute_budget.size() != n || compute_rate.size() != n)
    throw ValidationError("scenario: per-UAV vectors must have length n");
  for (std::size_t i = 0; i < n; ++i) {
    if (mem_budget[i] <= 0) throw ValidationError("scenario: mem_budget must be > 0");
    if (compute_budget[i] <= 0) throw ValidationError("scenario: compute_budget must be > 0");
    if (compute_rate[i] <= 0) throw ValidationError("scenario: compute_rate must be > 0");
  }
  if (request_origins.empty()) throw ValidationError("scenario: need at least one request");
  for (std::size_t o : request_origins)
    if (o >= n) throw ValidationError("scenario: request origin " + std::to_string(o + 1) +
                                      " out of range");
  if (rates.empty()) throw ValidationError("scenario: need at least one rate matrix");
  for (const RateMatrix& rm : rates)
    if (rm.n != n) throw ValidationError("scenario: rate matrix size mismatch");
}

Scenario Scenario::with_requests(std::size_t r) const {
  Scenario out = *this;
  out.request_origins.assign(request_origins.begin(), request_origins.begin() + r);
  return out;
}

}  // namespace uavplan
