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

#pragma once

#include "dqcc/config.hpp"
#include "dqcc/generators.hpp"

namespace dqcc {

struct BenchSpec {
  std::vector<std::string> suites;  // any of "bv", "dj", "random"
  std::uint32_t qubits_lo = 4;
  std::uint32_t qubits_hi = 12;
  std::uint32_t count = 100;      // random suite size
  std::uint32_t max_gates = 200;  // random suite gate budget
  std::uint64_t seed = 1;
  std::vector<Mode> modes{Mode::conservative};
};

/// The deterministic circuit list a bench spec expands to: BV/DJ with
/// all-ones secrets over the qubit range, plus seeded random circuits
/// cycling the three patterns.
std::vector<LogicalCircuit> bench_circuits(const BenchSpec& spec);

/// One report row per (circuit, mode), in (suite, circuit, mode) order.
std::vector<DepthReport> run_bench(const BenchSpec& spec, const RunConfig& cfg);

std::string reports_to_csv(std::span<const DepthReport> rows);
std::string reports_to_json(std::span<const DepthReport> rows);
std::string report_to_json(const DepthReport& row);

}  // namespace dqcc
