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
#include "dqcc/sim/statevector.hpp"

namespace dqcc::sim {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One measurement-outcome trajectory. outcome_record keeps the live
/// feed-forward bits (entries are dropped once no later instruction reads
/// them); trajectories that become indistinguishable — equal live records
/// and equal states — are coalesced, with probabilities summed.
struct Branch {
  std::vector<std::pair<std::uint32_t, std::uint8_t>> outcome_record;
  Statevector state;
  double probability = 1.0;
  /// Outcome paths this trajectory stands for (coalescing sums them).
  std::uint64_t path_count = 1;

  std::optional<std::uint8_t> bit(std::uint32_t id) const;
};

struct SimResult {
  std::vector<Branch> branches;
  /// Number of two-way measurement forks taken.
  std::uint64_t fork_count = 0;

  /// Distinct measurement-outcome paths enumerated: the branch count
  /// before any coalescing (2^measurements when every fork is binary).
  std::uint64_t path_total() const;
};

/// Exhaustive-branch simulation. Measurements fork with Born-rule
/// probabilities (outcome 0 enumerated first, zero-probability branches
/// pruned); conditioned instructions read the branch's outcome record with
/// parity semantics; RESET projects-and-zeroes within the branch.
SimResult simulate(std::span<const Instruction> instrs,
                   std::uint32_t qubit_count, const Statevector& input);

/// Convenience: runs a measurement-free logical circuit on one input.
Statevector run_unitary(const LogicalCircuit& c, const Statevector& input);

struct EquivalenceReport {
  bool equivalent = true;
  double worst_fidelity = 1.0;
  std::uint64_t branch_count = 0;  // max leaves over all tested inputs
  std::string failing_input;       // set when not equivalent
  std::string diagnostic;
};

/// Certifies that the compiled circuit acts on the data qubits exactly as
/// the logical circuit does: for every computational-basis input plus
/// `random_states` seeded random states, every measurement branch must
/// leave all non-data qubits in |0> and reproduce the reference state with
/// fidelity >= 1 - 1e-9. Final measurements of the logical circuit are
/// stripped on both sides; protocol measurements are enumerated.
EquivalenceReport check_equivalence(const LogicalCircuit& logical,
                                    const PhysicalCircuit& physical,
                                    std::uint32_t random_states = 20,
                                    std::uint64_t seed = 1);

}  // namespace dqcc::sim
