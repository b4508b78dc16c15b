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

#include "dqcc/schedule.hpp"

namespace dqcc {

/// Outcome of testing whether a CNOT may enter a destination bucket.
struct JoinResult {
  enum class Kind : std::uint8_t {
    shared_control,
    shared_target,
    independent,
    blocked,
  };
  Kind kind = Kind::blocked;
  std::string reason;  // set when blocked

  bool joinable() const { return kind != Kind::blocked; }
};

/// Evaluates g against the contents of dest: joinable(shared_control) when
/// dest uses g's control only as a CNOT control (of compatible grouping)
/// and g's target nowhere; shared_target symmetric; independent when the
/// supports are disjoint; blocked when an operand of g appears in dest
/// under any other role.
JoinResult can_join(const Instruction& g, const Bucket& dest);

/// Single-qubit gates a CNOT may commute past, by operand role. Diagonal
/// gates pass on the control; X-axis gates pass on the target. Used by the
/// relaxed mode only.
bool commutes_with_control(GateKind k);
bool commutes_with_target(GateKind k);

/// One sweep of the bucket-merging pass: scans source buckets (left to
/// right for forward, right to left for backward) and moves all CNOTs of a
/// bucket into joinable earlier (later) buckets, treating the bucket's
/// CNOT set as indivisible. Returns the updated flat instruction sequence
/// plus the merge groups formed. Conservative mode commits a bucket move
/// only when the structural depth after re-bucketing does not grow.
std::pair<std::vector<Instruction>, std::vector<SequenceGroup>> forward_sweep(
    const BucketedCircuit& bucketed, Mode mode);
std::pair<std::vector<Instruction>, std::vector<SequenceGroup>> backward_sweep(
    const BucketedCircuit& bucketed, Mode mode);

/// Full pass pipeline: forward sweep, backward sweep, cleanup and
/// re-bucketing. Groups smaller than the break-even size are demoted to
/// the naive decomposition (conservative keeps groups of at least
/// min_group_size_conservative, relaxed keeps pairs). In conservative mode
/// the result never has more buckets than the input.
BucketedCircuit optimize(const BucketedCircuit& bucketed, Mode mode,
                         const CostModel& cost);

}  // namespace dqcc
