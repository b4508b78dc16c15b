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

/// Raised by rebucketize when a joint group cannot be scheduled as one
/// atomic unit because an outside instruction depends on some members and
/// precedes others.
struct AtomicityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A merge group expressed over positions in a flat instruction sequence
/// (as opposed to MergeGroup, which indexes into one bucket).
struct SequenceGroup {
  MergeGroup::Kind kind = MergeGroup::Kind::independent;
  std::uint32_t shared_qubit = 0;
  std::vector<std::size_t> members;  // ascending positions
};

/// ASAP bucketization: each instruction lands in the earliest bucket after
/// all of its dependency predecessors. Barriers close all open buckets and
/// occupy a bucket of their own. Ties resolve by source order.
BucketedCircuit bucketize(std::span<const Instruction> instrs,
                          std::uint32_t qubit_count,
                          std::uint32_t classical_bit_count);
BucketedCircuit bucketize(const LogicalCircuit& c);

/// Same as bucketize, except every SequenceGroup is scheduled as one
/// atomic pseudo-instruction whose support is the union of its members'
/// qubits; all members land in the same bucket, which carries the group
/// annotation. Throws AtomicityViolation when interleaved external
/// dependencies make atomic placement illegal.
BucketedCircuit rebucketize(std::span<const Instruction> instrs,
                            std::span<const SequenceGroup> groups,
                            std::uint32_t qubit_count,
                            std::uint32_t classical_bit_count);

/// Order-preserving removal of empty buckets.
BucketedCircuit remove_empty(BucketedCircuit bucketed);

}  // namespace dqcc
