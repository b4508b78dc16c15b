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

#include "dqcc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dqcc {
namespace {

std::uint32_t positive_u32(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 ||
      v.get<std::uint64_t>() > 0xffffffffull)
    throw ConfigError(key + ": expected a positive integer");
  return v.get<std::uint32_t>();
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return;

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(path + ": expected a JSON object");

  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const nlohmann::json& v = it.value();
    if (key == "node_count") {
      if (!v.is_number_unsigned())
        throw ConfigError("node_count: expected a non-negative integer");
      cfg.node_count = v.get<std::uint32_t>();
    } else if (key == "memory_per_node") {
      cfg.memory_per_node = positive_u32(v, key);
    } else if (key == "placement") {
      std::string s = v.get<std::string>();
      if (s == "one_per_node")
        cfg.placement = PlacementPolicy::one_per_node;
      else if (s == "packed")
        cfg.placement = PlacementPolicy::packed;
      else
        throw ConfigError("placement: expected one_per_node or packed");
    } else if (key == "mode") {
      auto m = mode_from_string(v.get<std::string>());
      if (!m) throw ConfigError("mode: expected naive, conservative or relaxed");
      cfg.mode = *m;
    } else if (key == "naive_cnot_cost") {
      cfg.cost.naive_cnot_cost = positive_u32(v, key);
    } else if (key == "parallel_base_cost") {
      cfg.cost.parallel_base_cost = positive_u32(v, key);
    } else if (key == "parallel_increment") {
      cfg.cost.parallel_increment = positive_u32(v, key);
    } else if (key == "parallel_base_size") {
      cfg.cost.parallel_base_size = positive_u32(v, key);
    } else if (key == "min_group_size_conservative") {
      cfg.cost.min_group_size_conservative = positive_u32(v, key);
    } else if (key == "epr_cost") {
      cfg.cost.epr_cost = positive_u32(v, key);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  cfg.cost.check();
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  apply_config_file(cfg, path);
  return cfg;
}

}  // namespace dqcc
