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

#include "uavplan/scenario_file.hpp"

#include <fstream>
#include <sstream>

#include "uavplan/cnn_profile.hpp"
#include "uavplan/errors.hpp"

namespace uavplan {

std::int64_t memory_level_bytes(const std::string& level) {
  if (level == "high") return std::int64_t{512} << 20;
  if (level == "low") return std::int64_t{256} << 20;
  throw ParseError("unknown memory level '" + level + "' (expected high or low)");
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line_no) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + value + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(trim(part));
  return parts;
}

Position3D parse_position(const std::string& value, int line_no) {
  const auto parts = split(value, ',');
  if (parts.size() != 3)
    throw ParseError("line " + std::to_string(line_no) + ": position needs x,y,h");
  return {parse_double(parts[0], line_no), parse_double(parts[1], line_no),
          parse_double(parts[2], line_no)};
}

}  // namespace

ScenarioFile parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);

  ScenarioFile sf;
  std::string section;
  std::string line;
  int line_no = 0;
  bool mem_level_set = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      if (section != "swarm" && section != "radio" && section != "model" &&
          section != "requests" && section != "mobility" && section != "solver")
        throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + section +
                         "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto bad_key = [&]() {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key +
                       "' in section [" + section + "]");
    };

    if (section == "swarm") {
      if (key == "n") {
        sf.n = static_cast<std::size_t>(parse_double(value, line_no));
      } else if (key == "mem_budget") {
        sf.mem_budget.clear();
        for (const std::string& item : split(value, ',')) {
          if (item == "high" || item == "low") {
            sf.mem_budget.push_back(memory_level_bytes(item));
            mem_level_set = true;
          } else {
            sf.mem_budget.push_back(static_cast<std::int64_t>(parse_double(item, line_no)));
          }
        }
      } else if (key == "compute_rate") {
        sf.compute_rate = parse_double(value, line_no);
      } else if (key == "budget_seconds") {
        sf.budget_seconds = parse_double(value, line_no);
      } else if (key == "positions") {
        sf.positions.clear();
        for (const std::string& item : split(value, ';'))
          if (!item.empty()) sf.positions.push_back(parse_position(item, line_no));
      } else {
        bad_key();
      }
    } else if (section == "radio") {
      if (key == "tx_power") sf.radio.tx_power_w = parse_double(value, line_no);
      else if (key == "noise_floor") sf.radio.noise_floor_w = parse_double(value, line_no);
      else if (key == "path_loss_exponent")
        sf.radio.path_loss_exponent = parse_double(value, line_no);
      else if (key == "reference_gain") sf.radio.reference_gain = parse_double(value, line_no);
      else if (key == "bandwidth_hz") sf.radio.bandwidth_hz = parse_double(value, line_no);
      else if (key == "sinr_disconnect_threshold")
        sf.radio.sinr_disconnect_threshold = parse_double(value, line_no);
      else bad_key();
    } else if (section == "model") {
      if (key == "builtin" || key == "path") sf.model = value;
      else bad_key();
    } else if (section == "requests") {
      if (key == "origins") {
        sf.origins.clear();
        for (const std::string& item : split(value, ',')) {
          const double o = parse_double(item, line_no);
          if (o < 1)
            throw ParseError("line " + std::to_string(line_no) + ": origins are 1-based");
          sf.origins.push_back(static_cast<std::size_t>(o) - 1);
        }
      } else {
        bad_key();
      }
    } else if (section == "mobility") {
      if (!sf.rpg) sf.rpg = RpgParams{};
      if (key == "horizon") sf.horizon = static_cast<std::size_t>(parse_double(value, line_no));
      else if (key == "step_duration") sf.rpg->step_duration_s = parse_double(value, line_no);
      else if (key == "seed")
        sf.rpg->rng_seed = static_cast<std::uint64_t>(parse_double(value, line_no));
      else if (key == "leader_speed") sf.rpg->leader_speed_mps = parse_double(value, line_no);
      else if (key == "leader_start") sf.rpg->leader_start = parse_position(value, line_no);
      else if (key == "leader_end") sf.rpg->leader_end = parse_position(value, line_no);
      else if (key == "offset_radius")
        sf.rpg->member_offset_radius_m = parse_double(value, line_no);
      else if (key == "deviation_sigma")
        sf.rpg->member_deviation_sigma_m = parse_double(value, line_no);
      else bad_key();
    } else if (section == "solver") {
      if (key == "time_limit") sf.time_limit_s = parse_double(value, line_no);
      else if (key == "interference_mode") {
        if (value == "none") sf.interference = InterferenceMode::kNone;
        else if (value == "all_others") sf.interference = InterferenceMode::kAllOthers;
        else
          throw ParseError("line " + std::to_string(line_no) + ": interference_mode must be " +
                           "none or all_others");
      } else {
        bad_key();
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": key outside any section");
    }
  }

  if (sf.n < 1) throw ParseError(path + ": [swarm] n is required");
  if (sf.mem_budget.empty()) throw ParseError(path + ": [swarm] mem_budget is required");
  if (sf.model.empty()) throw ParseError(path + ": [model] builtin or path is required");
  if (sf.origins.empty()) throw ParseError(path + ": [requests] origins is required");
  if (sf.mem_budget.size() != 1 && sf.mem_budget.size() != sf.n)
    throw ParseError(path + ": mem_budget must be one value or one per UAV");
  if (!sf.positions.empty() && sf.positions.size() != sf.n)
    throw ParseError(path + ": positions must list one entry per UAV");
  if (sf.positions.empty() && !sf.rpg)
    throw ParseError(path + ": need either [swarm] positions or a [mobility] section");
  (void)mem_level_set;
  return sf;
}

Scenario build_scenario(const ScenarioFile& file) {
  Scenario s;
  if (file.model == "lenet") s.profile = builtin_lenet();
  else if (file.model == "vgg16") s.profile = builtin_vgg16();
  else s.profile = load_profile(file.model);

  s.n = file.n;
  s.mem_budget = file.mem_budget.size() == 1
                     ? std::vector<std::int64_t>(file.n, file.mem_budget[0])
                     : file.mem_budget;
  s.compute_rate.assign(file.n, file.compute_rate);
  s.compute_budget.assign(file.n, file.compute_rate * file.budget_seconds);
  s.request_origins = file.origins;

  if (!file.positions.empty()) {
    s.rates = {rate_matrix(file.positions, file.radio, file.interference)};
  } else {
    const Trajectory traj = predict(file.n, *file.rpg, std::max<std::size_t>(1, file.horizon));
    for (const auto& step_positions : traj.positions)
      s.rates.push_back(rate_matrix(step_positions, file.radio, file.interference));
  }
  s.validate();
  return s;
}

}  // namespace uavplan
