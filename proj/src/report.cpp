// Copyright 2026 dqcc contributors
//
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

#include "dqcc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "dqcc/pipeline.hpp"

namespace dqcc {
namespace {

std::uint64_t circuit_seed(std::uint64_t base, std::uint32_t i) {
  return base + std::uint64_t{0x9E3779B97F4A7C15} * (i + 1);
}

}  // namespace

std::vector<LogicalCircuit> bench_circuits(const BenchSpec& spec) {
  std::vector<LogicalCircuit> out;
  auto has = [&](const char* s) {
    return std::find(spec.suites.begin(), spec.suites.end(), s) !=
           spec.suites.end();
  };
  if (has("bv"))
    for (std::uint32_t n = spec.qubits_lo; n <= spec.qubits_hi; ++n)
      out.push_back(gen_bv(n, std::string(n, '1')));
  if (has("dj"))
    for (std::uint32_t n = spec.qubits_lo; n <= spec.qubits_hi; ++n)
      out.push_back(gen_dj(n, DjOracle::balanced, std::string(n, '1')));
  if (has("random")) {
    std::uint32_t span = spec.qubits_hi - spec.qubits_lo + 1;
    for (std::uint32_t i = 0; i < spec.count; ++i) {
      std::uint64_t seed = circuit_seed(spec.seed, i);
      std::mt19937_64 knobs(seed ^ 0xb5ad4eceda1ce2a9ull);
      std::uint32_t n = std::max<std::uint32_t>(2, spec.qubits_lo + i % span);
      std::uint32_t gates =
          20 + static_cast<std::uint32_t>(knobs() % (spec.max_gates - 19));
      auto pattern = static_cast<RandomPattern>(i % 3);
      out.push_back(gen_random(n, gates, seed, pattern));
    }
  }
  return out;
}

std::vector<DepthReport> run_bench(const BenchSpec& spec, const RunConfig& cfg) {
  std::vector<DepthReport> rows;
  auto circuits = bench_circuits(spec);
  std::uint32_t random_index = 0;
  for (const LogicalCircuit& c : circuits) {
    bool is_random = c.name.rfind("random_", 0) == 0;
    std::uint64_t seed =
        is_random ? circuit_seed(spec.seed, random_index++) : spec.seed;
    for (Mode mode : spec.modes) {
      RunConfig rc = cfg;
      rc.mode = mode;
      PipelineResult r = run_pipeline(c, rc);
      r.report.seed = seed;
      rows.push_back(r.report);
    }
  }
  return rows;
}

std::string reports_to_csv(std::span<const DepthReport> rows) {
  std::string out =
      "name,qubits,cnot_count,depth_naive,depth_opt,weighted_naive,"
      "weighted_opt,relative_improvement,seed,mode\n";
  char buf[64];
  for (const DepthReport& r : rows) {
    out += r.name + ",";
    out += std::to_string(r.qubits) + ",";
    out += std::to_string(r.cnot_count) + ",";
    out += std::to_string(r.depth_naive) + ",";
    out += std::to_string(r.depth_opt) + ",";
    out += std::to_string(r.weighted_naive) + ",";
    out += std::to_string(r.weighted_opt) + ",";
    std::snprintf(buf, sizeof buf, "%.17g", r.relative_improvement);
    out += std::string(buf) + ",";
    out += std::to_string(r.seed) + ",";
    out += mode_name(r.mode);
    out += "\n";
  }
  return out;
}

namespace {

nlohmann::ordered_json report_json(const DepthReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["qubits"] = r.qubits;
  j["cnot_count"] = r.cnot_count;
  j["depth_naive"] = r.depth_naive;
  j["depth_opt"] = r.depth_opt;
  j["weighted_naive"] = r.weighted_naive;
  j["weighted_opt"] = r.weighted_opt;
  j["relative_improvement"] = r.relative_improvement;
  j["seed"] = r.seed;
  j["mode"] = mode_name(r.mode);
  return j;
}

}  // namespace

std::string reports_to_json(std::span<const DepthReport> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const DepthReport& r : rows) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string report_to_json(const DepthReport& row) {
  return report_json(row).dump(2) + "\n";
}

}  // namespace dqcc
