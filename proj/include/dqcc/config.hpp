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

#include "dqcc/ir.hpp"

namespace dqcc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Run-wide knobs assembled from config files and CLI flags.
struct RunConfig {
  std::uint32_t node_count = 0;  // 0 = one node per logical qubit
  std::uint32_t memory_per_node = 4;
  PlacementPolicy placement = PlacementPolicy::one_per_node;
  Mode mode = Mode::conservative;
  CostModel cost;
};

/// Reads a JSON config file (keys: node_count, memory_per_node, placement,
/// mode, naive_cnot_cost, parallel_base_cost, parallel_increment,
/// parallel_base_size, min_group_size_conservative, epr_cost) into cfg.
/// Unknown keys and out-of-range values raise ConfigError; an empty file
/// leaves all defaults in place.
void apply_config_file(RunConfig& cfg, const std::string& path);

RunConfig load_config(const std::string& path);

}  // namespace dqcc
