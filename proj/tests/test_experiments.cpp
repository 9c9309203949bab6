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

#include "uavplan/experiments.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "uavplan/errors.hpp"

using namespace uavplan;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(UAVPLAN_BINARY_DIR) + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

SweepSpec small_spec() {
  SweepSpec spec;
  spec.model = "lenet";
  spec.n_list = {3};
  spec.mem_levels = {std::int64_t{512} << 20};
  spec.area_sides = {200.0};
  spec.r_range = {1};
  spec.methods = {Method::kNearest};
  spec.seeds = {7};
  return spec;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Blanks the solve_time_s column (index 10) so timing noise does not break
// byte-for-byte comparisons.
std::string strip_timing(const std::string& line) {
  std::stringstream ss(line);
  std::string field, out;
  int idx = 0;
  while (std::getline(ss, field, ',')) {
    out += (idx == 10 ? std::string("_") : field);
    out += ",";
    ++idx;
  }
  return out;
}

}  // namespace

TEST_CASE("sweep spec parsing") {
  const std::string path = write_temp("sweep_ok.ini",
                                      "[sweep]\n"
                                      "model = lenet\n"
                                      "n = 4, 6\n"
                                      "mem = high, low, 1000000\n"
                                      "compute_rate = 9.5e9\n"
                                      "budget_seconds = 10\n"
                                      "area = 150, 300\n"
                                      "r = 1, 2, 4\n"
                                      "horizon = 3\n"
                                      "methods = nearest, ould\n"
                                      "seeds = 1, 2\n"
                                      "time_limit = 15\n"
                                      "interference_mode = all_others\n");
  const SweepSpec spec = parse_sweep_spec(path);
  CHECK(spec.n_list == std::vector<std::size_t>{4, 6});
  CHECK(spec.mem_levels == std::vector<std::int64_t>{std::int64_t{512} << 20,
                                                     std::int64_t{256} << 20, 1000000});
  CHECK(spec.area_sides == std::vector<double>{150, 300});
  CHECK(spec.r_range == std::vector<std::size_t>{1, 2, 4});
  CHECK(spec.horizon == 3);
  CHECK(spec.methods == std::vector<Method>{Method::kNearest, Method::kOuld});
  CHECK(spec.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(spec.time_limit_s == 15.0);
  CHECK(spec.interference == InterferenceMode::kAllOthers);

  const std::string bad_key = write_temp("sweep_bad_key.ini", "[sweep]\nbogus = 1\n");
  CHECK_THROWS_AS(parse_sweep_spec(bad_key), ParseError);

  const std::string unsorted =
      write_temp("sweep_unsorted.ini",
                 "[sweep]\nmodel=lenet\nn=2\nmem=high\narea=100\nr=4,2\nmethods=nearest\n"
                 "seeds=1\n");
  CHECK_THROWS_AS(parse_sweep_spec(unsorted), ValidationError);
}

TEST_CASE("sweep scenarios are deterministic per seed") {
  const SweepSpec spec = small_spec();
  const Scenario a = make_sweep_scenario(spec, 4, std::int64_t{512} << 20, 200.0, 11, 3);
  const Scenario b = make_sweep_scenario(spec, 4, std::int64_t{512} << 20, 200.0, 11, 3);
  CHECK(a.request_origins == b.request_origins);
  REQUIRE(a.rates.size() == b.rates.size());
  for (std::size_t t = 0; t < a.rates.size(); ++t)
    CHECK(a.rates[t].rates == b.rates[t].rates);

  const Scenario c = make_sweep_scenario(spec, 4, std::int64_t{512} << 20, 200.0, 12, 3);
  CHECK(a.rates[0].rates != c.rates[0].rates);
}

TEST_CASE("one-cell grid produces exactly one row") {
  const std::string out_dir = std::string(UAVPLAN_BINARY_DIR) + "/sweep_one";
  const std::vector<SweepRow> rows = run_sweep(small_spec(), out_dir);
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].timeout);
  CHECK(rows[0].report.rejected_requests == 0);
  CHECK(rows[0].report.avg_latency_per_request > 0.0);

  const std::vector<std::string> lines = read_lines(out_dir + "/results.csv");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "method,R,N,area,mem_level,avg_latency_s,comm_s,comp_s,shared_bytes,rejected,"
        "solve_time_s,seed,status");
  CHECK(lines[1].rfind("nearest,1,3,200,high,", 0) == 0);
}

TEST_CASE("sweeps are reproducible modulo the timing column") {
  SweepSpec spec = small_spec();
  spec.r_range = {1, 2};
  spec.seeds = {3, 4};
  spec.methods = {Method::kNearest, Method::kHrm};
  const std::string dir_a = std::string(UAVPLAN_BINARY_DIR) + "/sweep_a";
  const std::string dir_b = std::string(UAVPLAN_BINARY_DIR) + "/sweep_b";
  run_sweep(spec, dir_a);
  run_sweep(spec, dir_b);
  const std::vector<std::string> a = read_lines(dir_a + "/results.csv");
  const std::vector<std::string> b = read_lines(dir_b + "/results.csv");
  REQUIRE(a.size() == 2 * 2 * 2 + 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(strip_timing(a[i]) == strip_timing(b[i]));
}

TEST_CASE("rejections grow with the request count under tight memory") {
  SweepSpec spec = small_spec();
  spec.n_list = {2};
  spec.mem_levels = {20'000'000};  // one LeNet instance per UAV, roughly
  spec.r_range = {1, 2, 3};
  const std::vector<SweepRow> rows =
      run_sweep(spec, std::string(UAVPLAN_BINARY_DIR) + "/sweep_tight");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].report.rejected_requests <= rows[1].report.rejected_requests);
  CHECK(rows[1].report.rejected_requests <= rows[2].report.rejected_requests);
  CHECK(rows[2].report.rejected_requests > 0);
}

TEST_CASE("runtime comparison runs both strategies") {
  SweepSpec spec = small_spec();
  spec.r_range = {1};
  const std::vector<RuntimeRow> rows = runtime_compare(spec, 3);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].horizon == 3);
  CHECK(!rows[0].timeout);
  CHECK(rows[0].ould_total_s > 0.0);
  CHECK(rows[0].ould_mp_s > 0.0);

  std::ostringstream out;
  write_runtime_csv(rows, out);
  CHECK(out.str().rfind("T,R,ould_total_runtime_s,ould_mp_runtime_s,status\n", 0) == 0);
}
