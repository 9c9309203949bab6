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

#include "uavplan/cnn_profile.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "uavplan/errors.hpp"

namespace uavplan {

void CnnProfile::validate() const {
  if (layers.empty()) throw ValidationError(model_name + ": profile has no layers");
  if (input_bytes <= 0) throw ValidationError(model_name + ": input_bytes must be > 0");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    if (l.index != static_cast<int>(i) + 1)
      throw ValidationError(model_name + ": layer indices must be contiguous from 1, got " +
                            std::to_string(l.index) + " at row " + std::to_string(i + 1));
    if (l.mem_bytes <= 0)
      throw ValidationError(model_name + ": mem_bytes must be > 0 in row " +
                            std::to_string(l.index));
    if (l.flops <= 0)
      throw ValidationError(model_name + ": flops must be > 0 in row " + std::to_string(l.index));
    if (l.output_bytes < 1)
      throw ValidationError(model_name + ": output_bytes must be >= 1 in row " +
                            std::to_string(l.index));
  }
}

namespace {

std::int64_t parse_i64(const std::string& field, int line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + field + "'");
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

CnnProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile file: " + path);

  CnnProfile profile;
  profile.model_name = path;

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("#input_bytes=", 0) == 0) {
      profile.input_bytes = parse_i64(line.substr(13), line_no);
      continue;
    }
    if (line[0] == '#') continue;
    if (!header_seen) {
      if (line != "index,name,mem_bytes,flops,output_bytes")
        throw ParseError("line " + std::to_string(line_no) + ": unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_csv(line);
    if (fields.size() != 5)
      throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields, got " +
                       std::to_string(fields.size()));
    LayerSpec l;
    l.index = static_cast<int>(parse_i64(fields[0], line_no));
    l.name = fields[1];
    l.mem_bytes = parse_i64(fields[2], line_no);
    l.flops = parse_i64(fields[3], line_no);
    l.output_bytes = parse_i64(fields[4], line_no);
    profile.layers.push_back(l);
  }
  if (!header_seen) throw ParseError(path + ": missing header line");
  profile.validate();
  return profile;
}

void save_profile(const CnnProfile& profile, std::ostream& out) {
  out << "#input_bytes=" << profile.input_bytes << "\n";
  out << "index,name,mem_bytes,flops,output_bytes\n";
  for (const LayerSpec& l : profile.layers)
    out << l.index << "," << l.name << "," << l.mem_bytes << "," << l.flops << ","
        << l.output_bytes << "\n";
}

namespace {

struct LayerRow {
  int index;
  const char* name;
  std::int64_t mem_bytes;
  std::int64_t flops;
  std::int64_t output_bytes;
};

CnnProfile make_profile(const char* name, std::int64_t input_bytes,
                        std::initializer_list<LayerRow> rows) {
  CnnProfile p;
  p.model_name = name;
  p.input_bytes = input_bytes;
  for (const LayerRow& r : rows)
    p.layers.push_back({r.index, r.name, r.mem_bytes, r.flops, r.output_bytes});
  p.validate();
  return p;
}

}  // namespace

// Generated by tools/gen_profiles.py for a 595x326 RGB input; the classic
// dense heads are expressed as convolutions so the parameter counts match
// the canonical architectures.
CnnProfile builtin_lenet() {
  return make_profile("lenet", 2327640,
                      {
                          {1, "conv1", 4569072, 171271800, 4567248},
                          {2, "pool1", 1139880, 1139880, 1139880},
                          {3, "conv2", 2933632, 219297600, 2923968},
                          {4, "pool2", 723840, 723840, 723840},
                          {5, "conv3", 5200800, 1001664000, 5008320},
                          {6, "conv4", 3546480, 210349440, 3505824},
                          {7, "classifier", 3440, 878136, 40},
                      });
}

CnnProfile builtin_vgg16() {
  return make_profile("vgg16", 2327640,
                      {
                          {1, "conv1_1", 49663488, 670360320, 49656320},
                          {2, "conv1_2", 49804032, 14301020160, 49656320},
                          {3, "conv1_pool", 12393216, 12393216, 12393216},
                          {4, "conv2_1", 25081856, 7138492416, 24786432},
                          {5, "conv2_2", 25376768, 14276984832, 24786432},
                          {6, "conv2_pool", 6137856, 6137856, 6137856},
                          {7, "conv3_1", 13456384, 7070810112, 12275712},
                          {8, "conv3_2", 14636032, 14141620224, 12275712},
                          {9, "conv3_3", 5391360, 14144651264, 3031040},
                          {10, "conv4_1", 10782720, 6983516160, 6062080},
                          {11, "conv4_2", 15501312, 13967032320, 6062080},
                          {12, "conv4_3", 10954752, 13968547840, 1515520},
                          {13, "conv5_1", 10954752, 3491758080, 1515520},
                          {14, "conv5_2", 10954752, 3491758080, 1515520},
                          {15, "conv5_3", 9807872, 3492126720, 368640},
                          {16, "fc1", 411844608, 9865003008, 786432},
                          {17, "fc2", 67911680, 1610612736, 786432},
                          {18, "classifier", 16392000, 8388608, 4000},
                      });
}

std::int64_t total_memory(const CnnProfile& profile) {
  std::int64_t sum = 0;
  for (const LayerSpec& l : profile.layers) sum += l.mem_bytes;
  return sum;
}

std::int64_t total_flops(const CnnProfile& profile) {
  std::int64_t sum = 0;
  for (const LayerSpec& l : profile.layers) sum += l.flops;
  return sum;
}

}  // namespace uavplan
