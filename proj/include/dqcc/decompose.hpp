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

#include "dqcc/depth.hpp"
#include "dqcc/ir.hpp"

namespace dqcc {

struct DecomposeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Both operands of a "distributed" CNOT live on one node.
struct LocalGateError : DecomposeError {
  using DecomposeError::DecomposeError;
};
/// No free memory slot for the GHZ root buffer.
struct ResourceError : DecomposeError {
  using DecomposeError::DecomposeError;
};
/// Two group members map onto the same node.
struct NodeCollisionError : DecomposeError {
  using DecomposeError::DecomposeError;
};
/// Bucket violates the post-sweep disjointness invariant.
struct MalformedBucket : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Allocator for fresh protocol feed-forward bits.
struct ClassicalAlloc {
  std::uint32_t next = 0;
  std::uint32_t fresh() { return next++; }
};

/// Partitions the CNOTs of a post-sweep bucket into maximal groups sharing
/// a control, else sharing a target, else singleton independent groups.
/// Sorting by qubit indices makes the extraction deterministic.
std::vector<MergeGroup> group_bucket(const Bucket& b);

/// Teleportation-based distributed CNOT between nodes A = node(c) and
/// B = node(t): EPR on the electrons, local CNOT(c,e_A), Z-measurement with
/// conditioned X(e_B), local CNOT(e_B,t), X-measurement with conditioned
/// Z(c), resets. Throws LocalGateError when c and t are co-located.
std::vector<Instruction> decompose_naive_cnot(const QubitRef& c,
                                              const QubitRef& t,
                                              const NodeTopology& topo,
                                              ClassicalAlloc& bits);

/// Star fusion of a k-party GHZ state onto the communication qubits of
/// `nodes`, using one free memory qubit on nodes[0] as the root buffer.
std::vector<Instruction> build_ghz(std::span<const std::uint32_t> nodes,
                                   const QubitRef& root_buffer,
                                   const NodeTopology& topo,
                                   ClassicalAlloc& bits);

/// Joint decomposition of n >= 2 CNOTs sharing control c: one GHZ state
/// over all participating nodes, cat-entangle of c, simultaneous local
/// CNOTs onto the targets, cat-disentangle with a parity-conditioned Z.
std::vector<Instruction> decompose_shared_control(
    const QubitRef& c, std::span<const QubitRef> targets,
    const QubitRef& root_buffer, const NodeTopology& topo, ClassicalAlloc& bits);

/// Joint decomposition of n >= 2 CNOTs sharing target t, realized as
/// H(t) . [parallel CZ fan-in via cat state] . H(t).
std::vector<Instruction> decompose_shared_target(
    const QubitRef& t, std::span<const QubitRef> controls,
    const QubitRef& root_buffer, const NodeTopology& topo, ClassicalAlloc& bits);

struct CompileResult {
  PhysicalCircuit circuit;
  /// The input plan with per-bucket groups normalized to the grouping the
  /// decomposition stage actually used.
  BucketedCircuit plan;
  Annotations annotations;
};

/// Expands a bucketed logical circuit into physical instructions.
/// Single-qubit gates pass through onto their placed memory qubits; local
/// CNOTs are emitted directly; shared groups of at least the break-even
/// size (2 in relaxed mode) expand via the parallel constructions and
/// smaller or colliding groups fall back to the naive protocol.
CompileResult compile(const BucketedCircuit& bucketed,
                      const Placement& placement, const NodeTopology& topo,
                      Mode mode, const CostModel& cost,
                      const std::string& name = {});

}  // namespace dqcc
