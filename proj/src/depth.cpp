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

#include "dqcc/depth.hpp"

#include <algorithm>

namespace dqcc {

std::vector<std::uint32_t> asap_layers(std::span<const Instruction> instrs,
                                       std::uint32_t qubit_count,
                                       std::uint32_t classical_bit_count) {
  std::vector<std::uint32_t> last_q(qubit_count, 0);
  std::vector<std::uint32_t> last_b(classical_bit_count, 0);
  std::uint32_t fence = 0;       // layer of the last barrier
  std::uint32_t top = 0;         // highest layer assigned so far
  std::vector<std::uint32_t> layers;
  layers.reserve(instrs.size());

  for (const Instruction& in : instrs) {
    if (in.kind == GateKind::Barrier) {
      std::uint32_t layer = top + 1;
      fence = layer;
      top = layer;
      layers.push_back(layer);
      continue;
    }
    std::uint32_t ready = fence;
    for (std::uint32_t q : in.operands) ready = std::max(ready, last_q.at(q));
    if (in.writes) ready = std::max(ready, last_b.at(*in.writes));
    if (in.condition)
      for (std::uint32_t b : in.condition->bits)
        ready = std::max(ready, last_b.at(b));
    std::uint32_t layer = ready + 1;
    for (std::uint32_t q : in.operands) last_q[q] = layer;
    if (in.writes) last_b[*in.writes] = layer;
    if (in.condition)
      for (std::uint32_t b : in.condition->bits) last_b[b] = layer;
    top = std::max(top, layer);
    layers.push_back(layer);
  }
  return layers;
}

std::uint32_t depth_layers(std::span<const Instruction> instrs,
                           std::uint32_t qubit_count,
                           std::uint32_t classical_bit_count) {
  auto layers = asap_layers(instrs, qubit_count, classical_bit_count);
  std::uint32_t d = 0;
  for (std::uint32_t l : layers) d = std::max(d, l);
  return d;
}

std::uint32_t depth_layers(const LogicalCircuit& c) {
  return depth_layers(c.instructions, c.qubit_count, c.classical_bit_count);
}

std::uint32_t depth_layers(const PhysicalCircuit& c) {
  return depth_layers(c.instructions, c.topology.total_qubits(),
                      c.classical_bit_count);
}

Annotations annotate_naive(const BucketedCircuit& bucketed,
                           const Placement& placement) {
  Annotations ann(bucketed.buckets.size());
  for (std::size_t i = 0; i < bucketed.buckets.size(); ++i) {
    const Bucket& b = bucketed.buckets[i];
    ann[i].tags.assign(b.instructions.size(), CnotTag::none);
    ann[i].parallel.assign(b.groups.size(), false);
    for (std::size_t j = 0; j < b.instructions.size(); ++j) {
      const Instruction& in = b.instructions[j];
      if (!in.is_cnot()) continue;
      bool local =
          placement.node_of(in.control()) == placement.node_of(in.target());
      ann[i].tags[j] = local ? CnotTag::local : CnotTag::naive;
    }
  }
  return ann;
}

std::uint64_t weighted_depth(const BucketedCircuit& bucketed,
                             const CostModel& cost, const Annotations& ann) {
  if (ann.size() != bucketed.buckets.size())
    throw InternalError("weighted_depth: annotation size mismatch");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < bucketed.buckets.size(); ++i) {
    const Bucket& b = bucketed.buckets[i];
    const BucketAnnotation& ba = ann[i];
    if (ba.tags.size() != b.instructions.size() ||
        ba.parallel.size() != b.groups.size())
      throw InternalError("weighted_depth: annotation shape mismatch");

    std::vector<bool> covered(b.instructions.size(), false);
    std::uint64_t bucket_cost = 0;
    for (std::size_t g = 0; g < b.groups.size(); ++g) {
      if (!ba.parallel[g]) continue;
      for (std::uint32_t m : b.groups[g].members) covered.at(m) = true;
      bucket_cost =
          std::max(bucket_cost, cost.parallel_group_cost(b.groups[g].size()));
    }
    for (std::size_t j = 0; j < b.instructions.size(); ++j) {
      if (covered[j]) continue;
      const Instruction& in = b.instructions[j];
      std::uint64_t w = 1;
      if (in.is_cnot()) {
        switch (ba.tags[j]) {
          case CnotTag::local: w = 1; break;
          case CnotTag::naive: w = cost.naive_cnot_cost; break;
          case CnotTag::grouped:
          case CnotTag::none:
            throw InternalError(
                "weighted_depth: CNOT without a usable annotation");
        }
      } else if (in.kind == GateKind::EPR) {
        w = cost.epr_cost;
      }
      bucket_cost = std::max(bucket_cost, w);
    }
    total += bucket_cost;
  }
  return total;
}

}  // namespace dqcc
