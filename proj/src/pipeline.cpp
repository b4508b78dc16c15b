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

#include "dqcc/pipeline.hpp"

#include "dqcc/parallelize.hpp"
#include "dqcc/validate.hpp"

namespace dqcc {

NodeTopology resolve_topology(const LogicalCircuit& logical,
                              const RunConfig& cfg) {
  NodeTopology topo;
  topo.memory_per_node = cfg.memory_per_node;
  std::uint32_t L = std::max<std::uint32_t>(logical.qubit_count, 1);
  if (cfg.node_count > 0) {
    topo.node_count = cfg.node_count;
  } else if (cfg.placement == PlacementPolicy::packed) {
    topo.node_count = (L + cfg.memory_per_node - 1) / cfg.memory_per_node;
  } else {
    topo.node_count = L;
  }
  return topo;
}

Placement resolve_placement(const LogicalCircuit& logical, const RunConfig& cfg,
                            const NodeTopology& topo) {
  Placement p = cfg.placement == PlacementPolicy::packed
                    ? Placement::packed(logical.qubit_count, topo)
                    : Placement::one_per_node(logical.qubit_count);
  for (const QubitRef& q : p.slots)
    if (!q.valid_in(topo))
      throw ConfigError("topology too small: placing qubit on " + q.str() +
                        " needs more nodes or memory");
  return p;
}

PipelineResult run_pipeline(const LogicalCircuit& logical, const RunConfig& cfg) {
  auto violations = validate(logical);
  if (!violations.empty())
    throw std::invalid_argument("invalid circuit '" + logical.name +
                                "': " + violations.front().message);
  cfg.cost.check();

  PipelineResult r;
  r.topology = resolve_topology(logical, cfg);
  r.placement = resolve_placement(logical, cfg, r.topology);
  r.base_plan = bucketize(logical);

  r.naive = compile(r.base_plan, r.placement, r.topology, Mode::naive, cfg.cost,
                    logical.name);
  if (cfg.mode == Mode::naive) {
    r.optimized = r.naive;
  } else {
    BucketedCircuit plan = optimize(r.base_plan, cfg.mode, cfg.cost);
    r.optimized =
        compile(plan, r.placement, r.topology, cfg.mode, cfg.cost, logical.name);
  }

  std::uint64_t depth_naive = depth_layers(r.naive.circuit);
  std::uint64_t depth_opt = depth_layers(r.optimized.circuit);
  if (cfg.mode == Mode::conservative && depth_opt > depth_naive) {
    r.optimized = r.naive;
    depth_opt = depth_naive;
    r.safety_net_triggered = true;
  }

  DepthReport& rep = r.report;
  rep.name = logical.name;
  rep.qubits = logical.qubit_count;
  for (const Instruction& in : logical.instructions)
    if (in.is_cnot()) ++rep.cnot_count;
  rep.depth_naive = depth_naive;
  rep.depth_opt = depth_opt;
  rep.weighted_naive = weighted_depth(r.naive.plan, cfg.cost, r.naive.annotations);
  rep.weighted_opt =
      weighted_depth(r.optimized.plan, cfg.cost, r.optimized.annotations);
  rep.relative_improvement =
      depth_naive == 0
          ? 0.0
          : static_cast<double>(depth_naive - depth_opt) /
                static_cast<double>(depth_naive);
  rep.mode = cfg.mode;
  return r;
}

}  // namespace dqcc
