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

#ifndef UAVPLAN_CHANNEL_HPP
#define UAVPLAN_CHANNEL_HPP

#include <cstddef>
#include <vector>

namespace uavplan {

/// Air-to-air radio link parameters. Received power follows a log-distance
/// path-loss law: S = tx_power * reference_gain * d^-path_loss_exponent.
struct RadioParams {
  double tx_power_w = 0.1;
  double noise_floor_w = 1e-13;
  double path_loss_exponent = 2.7;
  double reference_gain = 1e-4;      // path-loss constant at 1 m
  double bandwidth_hz = 20e6;
  double sinr_disconnect_threshold = 1e-3;  // SINR at or below => link down

  void validate() const;
};

struct Position3D {
  double x = 0;  // meters
  double y = 0;
  double h = 0;  // altitude, fixed per swarm
};

/// Pairwise achievable data rates in bits/s; diagonal unused (zero).
struct RateMatrix {
  std::size_t n = 0;
  std::vector<double> rates;  // row-major n*n

  RateMatrix() = default;
  explicit RateMatrix(std::size_t size) : n(size), rates(size * size, 0.0) {}

  double operator()(std::size_t i, std::size_t k) const { return rates[i * n + k]; }
  double& operator()(std::size_t i, std::size_t k) { return rates[i * n + k]; }
};

enum class InterferenceMode { kNone, kAllOthers };

double distance(const Position3D& a, const Position3D& b);

/// SINR of the link i -> k. Every node in `interferers` other than i and k
/// contributes tx_power * reference_gain * d^-alpha of interference power.
double sinr(std::size_t i, std::size_t k, const std::vector<Position3D>& positions,
            const std::vector<std::size_t>& interferers, const RadioParams& params);

/// Shannon rate B*log2(1+SINR) per pair; links at or below the disconnect
/// threshold get exactly zero.
RateMatrix rate_matrix(const std::vector<Position3D>& positions, const RadioParams& params,
                       InterferenceMode mode);

}  // namespace uavplan

#endif  // UAVPLAN_CHANNEL_HPP
