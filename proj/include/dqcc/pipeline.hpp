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
#include "dqcc/decompose.hpp"

namespace dqcc {

struct PipelineResult {
  NodeTopology topology;
  Placement placement;
  BucketedCircuit base_plan;  // ASAP bucketization of the input
  CompileResult naive;        // every distributed CNOT sequential
  CompileResult optimized;    // requested mode (== naive in naive mode)
  /// True when the compiled-optimized output would have exceeded the
  /// compiled-naive depth and the naive plan was returned instead
  /// (conservative mode guarantee).
  bool safety_net_triggered = false;
  DepthReport report;
};

/// parse/generate -> bucketize -> optimize(mode) -> compile, plus the naive
/// baseline of the same circuit and the depth comparison record.
PipelineResult run_pipeline(const LogicalCircuit& logical, const RunConfig& cfg);

/// Topology/placement resolution used by the pipeline: node_count 0 means
/// one node per logical qubit (packed placements round up instead).
NodeTopology resolve_topology(const LogicalCircuit& logical, const RunConfig& cfg);
Placement resolve_placement(const LogicalCircuit& logical, const RunConfig& cfg,
                            const NodeTopology& topo);

}  // namespace dqcc
