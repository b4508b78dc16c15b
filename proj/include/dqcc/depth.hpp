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

/// ASAP layer (1-based) of every instruction. Two instructions depend iff
/// they share a qubit or touch a common classical bit (read or write).
/// Barriers act as full fences and occupy a layer of their own.
std::vector<std::uint32_t> asap_layers(std::span<const Instruction> instrs,
                                       std::uint32_t qubit_count,
                                       std::uint32_t classical_bit_count);

/// Length of the longest chain in the dependency DAG; equals the minimal
/// number of disjoint-support layers.
std::uint32_t depth_layers(std::span<const Instruction> instrs,
                           std::uint32_t qubit_count,
                           std::uint32_t classical_bit_count);
std::uint32_t depth_layers(const LogicalCircuit& c);
std::uint32_t depth_layers(const PhysicalCircuit& c);

/// Per-CNOT cost classification for weighted depth.
enum class CnotTag : std::uint8_t { none, local, naive, grouped };

struct BucketAnnotation {
  std::vector<CnotTag> tags;   // one per bucket instruction (non-CNOTs: none)
  std::vector<bool> parallel;  // one per bucket group: expands as a block?
};

using Annotations = std::vector<BucketAnnotation>;

/// Annotations for a plan compiled without any parallel construction:
/// every distributed CNOT is tagged naive, co-located CNOTs local.
Annotations annotate_naive(const BucketedCircuit& bucketed,
                           const Placement& placement);

/// Critical-path cost of a bucketed plan: concurrent items in one bucket
/// contribute the max of their weights, buckets add up. A parallel group
/// of n costs parallel_base_cost + parallel_increment * (n - base_size); a
/// naive distributed CNOT costs naive_cnot_cost; local gates cost 1.
/// Throws InternalError for a CNOT without an annotation.
std::uint64_t weighted_depth(const BucketedCircuit& bucketed,
                             const CostModel& cost, const Annotations& ann);

}  // namespace dqcc
