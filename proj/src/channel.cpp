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

#include "uavplan/channel.hpp"

#include <cmath>

#include "uavplan/errors.hpp"

namespace uavplan {

void RadioParams::validate() const {
  if (tx_power_w <= 0) throw ValidationError("tx_power must be > 0");
  if (noise_floor_w <= 0) throw ValidationError("noise_floor must be > 0");
  if (bandwidth_hz <= 0) throw ValidationError("bandwidth_hz must be > 0");
  if (path_loss_exponent < 2) throw ValidationError("path_loss_exponent must be >= 2");
  if (sinr_disconnect_threshold < 0)
    throw ValidationError("sinr_disconnect_threshold must be >= 0");
}

double distance(const Position3D& a, const Position3D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dh = a.h - b.h;
  return std::sqrt(dx * dx + dy * dy + dh * dh);
}

namespace {

double received_power(double d, const RadioParams& p) {
  return p.tx_power_w * p.reference_gain * std::pow(d, -p.path_loss_exponent);
}

}  // namespace

double sinr(std::size_t i, std::size_t k, const std::vector<Position3D>& positions,
            const std::vector<std::size_t>& interferers, const RadioParams& params) {
  const double d = distance(positions[i], positions[k]);
  if (d == 0) throw ZeroDistanceError("sinr: transmitter and receiver are co-located");
  const double signal = received_power(d, params);
  double interference = 0;
  for (std::size_t l : interferers) {
    if (l == i || l == k) continue;
    const double dl = distance(positions[l], positions[k]);
    if (dl == 0) throw ZeroDistanceError("sinr: interferer co-located with receiver");
    interference += received_power(dl, params);
  }
  return signal / (params.noise_floor_w + interference);
}

RateMatrix rate_matrix(const std::vector<Position3D>& positions, const RadioParams& params,
                       InterferenceMode mode) {
  const std::size_t n = positions.size();
  if (n < 2) throw ValidationError("rate_matrix: need at least 2 positions");
  params.validate();

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::vector<std::size_t> none;

  RateMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      const auto& interferers = (mode == InterferenceMode::kAllOthers) ? all : none;
      const double g = sinr(i, k, positions, interferers, params);
      out(i, k) = (g > params.sinr_disconnect_threshold)
                      ? params.bandwidth_hz * std::log2(1.0 + g)
                      : 0.0;
    }
  }
  return out;
}

}  // namespace uavplan
