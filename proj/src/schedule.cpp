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

#include "dqcc/schedule.hpp"

#include <algorithm>
#include <set>

namespace dqcc {
namespace {

struct PendingGroup {
  std::uint32_t ready = 0;        // max layer of accumulated predecessors
  std::size_t seen = 0;           // members scanned so far
  std::set<std::uint32_t> seen_qubits;
};

}  // namespace

BucketedCircuit rebucketize(std::span<const Instruction> instrs,
                            std::span<const SequenceGroup> groups,
                            std::uint32_t qubit_count,
                            std::uint32_t classical_bit_count) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group_of(instrs.size(), kNone);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t p : groups[g].members) {
      if (p >= instrs.size())
        throw InternalError("rebucketize: group member out of range");
      if (group_of[p] != kNone)
        throw InternalError("rebucketize: instruction in two groups");
      group_of[p] = g;
    }

  std::vector<std::uint32_t> last_q(qubit_count, 0);
  std::vector<std::uint32_t> last_b(classical_bit_count, 0);
  std::vector<PendingGroup> pending(groups.size());
  std::size_t open_groups = 0;
  std::uint32_t fence = 0;
  std::uint32_t top = 0;
  std::vector<std::uint32_t> layer(instrs.size(), 0);

  auto touches_open_group = [&](const Instruction& in,
                                std::size_t own_group) -> bool {
    if (open_groups == 0) return false;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (g == own_group) continue;
      const PendingGroup& pg = pending[g];
      if (pg.seen == 0 || pg.seen == groups[g].members.size()) continue;
      if (in.kind == GateKind::Barrier) return true;
      for (std::uint32_t q : in.operands)
        if (pg.seen_qubits.count(q)) return true;
    }
    return false;
  };

  for (std::size_t p = 0; p < instrs.size(); ++p) {
    const Instruction& in = instrs[p];
    std::size_t g = group_of[p];
    if (touches_open_group(in, g))
      throw AtomicityViolation(
          "instruction at position " + std::to_string(p) +
          " depends on part of a joint group scheduled atomically");

    if (in.kind == GateKind::Barrier) {
      std::uint32_t l = top + 1;
      fence = l;
      top = l;
      layer[p] = l;
      continue;
    }

    std::uint32_t ready = fence;
    for (std::uint32_t q : in.operands) ready = std::max(ready, last_q.at(q));
    if (in.writes) ready = std::max(ready, last_b.at(*in.writes));
    if (in.condition)
      for (std::uint32_t b : in.condition->bits)
        ready = std::max(ready, last_b.at(b));

    if (g == kNone) {
      std::uint32_t l = ready + 1;
      for (std::uint32_t q : in.operands) last_q[q] = l;
      if (in.writes) last_b[*in.writes] = l;
      if (in.condition)
        for (std::uint32_t b : in.condition->bits) last_b[b] = l;
      top = std::max(top, l);
      layer[p] = l;
      continue;
    }

    PendingGroup& pg = pending[g];
    if (pg.seen == 0) ++open_groups;
    pg.ready = std::max(pg.ready, ready);
    for (std::uint32_t q : in.operands) pg.seen_qubits.insert(q);
    ++pg.seen;
    if (pg.seen == groups[g].members.size()) {
      std::uint32_t l = pg.ready + 1;
      for (std::size_t m : groups[g].members) layer[m] = l;
      for (std::uint32_t q : pg.seen_qubits) last_q[q] = l;
      top = std::max(top, l);
      --open_groups;
    }
  }

  BucketedCircuit out;
  out.qubit_count = qubit_count;
  out.classical_bit_count = classical_bit_count;
  out.buckets.resize(top);
  // Bucket-local index of every placed instruction, for group annotations.
  std::vector<std::uint32_t> local(instrs.size(), 0);
  for (std::size_t p = 0; p < instrs.size(); ++p) {
    Bucket& b = out.buckets.at(layer[p] - 1);
    local[p] = static_cast<std::uint32_t>(b.instructions.size());
    b.instructions.push_back(instrs[p]);
  }
  for (const SequenceGroup& sg : groups) {
    if (sg.members.empty()) continue;
    MergeGroup mg;
    mg.kind = sg.kind;
    mg.shared_qubit = sg.shared_qubit;
    for (std::size_t m : sg.members) mg.members.push_back(local[m]);
    std::sort(mg.members.begin(), mg.members.end());
    out.buckets.at(layer[sg.members.front()] - 1).groups.push_back(mg);
  }
  return out;
}

BucketedCircuit bucketize(std::span<const Instruction> instrs,
                          std::uint32_t qubit_count,
                          std::uint32_t classical_bit_count) {
  return rebucketize(instrs, {}, qubit_count, classical_bit_count);
}

BucketedCircuit bucketize(const LogicalCircuit& c) {
  return bucketize(c.instructions, c.qubit_count, c.classical_bit_count);
}

BucketedCircuit remove_empty(BucketedCircuit bucketed) {
  auto& v = bucketed.buckets;
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](const Bucket& b) { return b.instructions.empty(); }),
          v.end());
  return bucketed;
}

}  // namespace dqcc
