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

#ifndef UAVPLAN_CNN_PROFILE_HPP
#define UAVPLAN_CNN_PROFILE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace uavplan {

/// One CNN layer as a resource descriptor: memory footprint (parameters plus
/// output activation), compute demand, and the size of the intermediate
/// output shipped to the next layer.
struct LayerSpec {
  int index = 0;  // 1-based
  std::string name;
  std::int64_t mem_bytes = 0;
  std::int64_t flops = 0;
  std::int64_t output_bytes = 0;
};

struct CnnProfile {
  std::string model_name;
  std::vector<LayerSpec> layers;
  std::int64_t input_bytes = 0;  // captured image size shipped on the source hop

  std::size_t num_layers() const { return layers.size(); }
  void validate() const;  // throws ValidationError
};

/// Parses the profile CSV format: a `#input_bytes=<n>` pragma line, then a
/// header `index,name,mem_bytes,flops,output_bytes`, then one row per layer.
CnnProfile load_profile(const std::string& path);

void save_profile(const CnnProfile& profile, std::ostream& out);

/// Built-in profiles for a 595x326 RGB input. The constants are generated by
/// tools/gen_profiles.py; see that script for the shape arithmetic.
CnnProfile builtin_lenet();
CnnProfile builtin_vgg16();

std::int64_t total_memory(const CnnProfile& profile);
std::int64_t total_flops(const CnnProfile& profile);

}  // namespace uavplan

#endif  // UAVPLAN_CNN_PROFILE_HPP
