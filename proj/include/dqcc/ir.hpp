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

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqcc {

/// Error raised when an internal invariant of the compiler is broken.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GateKind : std::uint8_t {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  RZ,
  RX,
  RY,
  CNOT,
  CZ,
  SWAP,
  MeasureZ,
  MeasureX,
  Reset,
  EPR,
  Barrier,
};

const char* gate_name(GateKind k);
bool is_rotation(GateKind k);
bool is_measurement(GateKind k);
bool is_single_qubit_gate(GateKind k);  // unitary 1q gates only
/// Number of qubit operands the gate takes (Barrier reports 0: it is a
/// global fence and carries no operands in the IR).
int gate_arity(GateKind k);

enum class QubitRole : std::uint8_t { communication, memory };

/// Node layout of the distributed machine. Every node owns one
/// communication qubit (electron) and `memory_per_node` memory qubits.
struct NodeTopology {
  std::uint32_t node_count = 1;
  std::uint32_t memory_per_node = 4;
  bool all_to_all = true;

  std::uint32_t qubits_per_node() const { return 1 + memory_per_node; }
  std::uint32_t total_qubits() const { return node_count * qubits_per_node(); }
};

/// Address of one physical qubit: (node, role, index within role).
struct QubitRef {
  std::uint32_t node = 0;
  QubitRole role = QubitRole::memory;
  std::uint32_t local_index = 0;

  static QubitRef comm(std::uint32_t node) {
    return {node, QubitRole::communication, 0};
  }
  static QubitRef mem(std::uint32_t node, std::uint32_t slot) {
    return {node, QubitRole::memory, slot};
  }

  /// Dense id used by instruction operands, indexing node-major with the
  /// communication qubit first: node * (1 + M) + (comm ? 0 : 1 + slot).
  std::uint32_t flat(const NodeTopology& topo) const;
  static QubitRef from_flat(const NodeTopology& topo, std::uint32_t id);

  bool valid_in(const NodeTopology& topo) const;
  std::string str() const;  // "n3.e0" / "n3.m2"

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
};

/// Map from logical qubit index to the memory qubit holding it.
struct Placement {
  std::vector<QubitRef> slots;  // indexed by logical qubit

  /// Default policy: logical i lives on node i, memory slot 0. Every CNOT
  /// between distinct logical qubits is then distributed.
  static Placement one_per_node(std::uint32_t logical_count);
  /// Packs memory_per_node logical qubits onto each node in order.
  static Placement packed(std::uint32_t logical_count, const NodeTopology& topo);

  std::uint32_t size() const { return static_cast<std::uint32_t>(slots.size()); }
  const QubitRef& qubit_of(std::uint32_t logical) const { return slots.at(logical); }
  std::uint32_t node_of(std::uint32_t logical) const { return slots.at(logical).node; }
  bool injective() const;
  /// Highest-index memory slot on `node` not holding a logical qubit, or
  /// nullopt when the node is fully occupied.
  std::optional<std::uint32_t> free_memory_slot(std::uint32_t node,
                                                const NodeTopology& topo) const;
};

/// Classical feed-forward condition: the instruction applies iff the XOR
/// of the referenced bits equals `parity`.
struct Condition {
  std::vector<std::uint32_t> bits;
  std::uint8_t parity = 1;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// One gate, measurement or entanglement primitive. Operands are logical
/// qubit indices in a LogicalCircuit and flat physical ids (QubitRef::flat)
/// in a PhysicalCircuit.
struct Instruction {
  GateKind kind = GateKind::H;
  double theta = 0.0;  // RZ/RX/RY only
  std::vector<std::uint32_t> operands;
  std::optional<std::uint32_t> writes;  // classical bit, measurements only
  std::optional<Condition> condition;

  bool is_cnot() const { return kind == GateKind::CNOT; }
  std::uint32_t control() const { return operands.at(0); }
  std::uint32_t target() const { return operands.at(1); }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

Instruction make_gate(GateKind k, std::uint32_t q);
Instruction make_gate(GateKind k, std::uint32_t a, std::uint32_t b);
Instruction make_rotation(GateKind k, double theta, std::uint32_t q);
Instruction make_measure(GateKind k, std::uint32_t q, std::uint32_t bit);
Instruction make_barrier();

/// The operand qubits of an instruction (pairwise distinct by invariant).
std::span<const std::uint32_t> qubits_of(const Instruction& instr);

/// Pre-decomposition circuit over logical qubit indices. Restricted to the
/// logical gate subset: no EPR, no conditions.
struct LogicalCircuit {
  std::string name;
  std::uint32_t qubit_count = 0;
  std::uint32_t classical_bit_count = 0;
  std::vector<Instruction> instructions;
};

struct MergeGroup {
  enum class Kind : std::uint8_t { shared_control, shared_target, independent };
  Kind kind = Kind::independent;
  std::uint32_t shared_qubit = 0;       // meaningful for shared_* kinds
  std::vector<std::uint32_t> members;   // indices into the owning bucket

  std::uint32_t size() const { return static_cast<std::uint32_t>(members.size()); }
  friend bool operator==(const MergeGroup&, const MergeGroup&) = default;
};

/// One execution layer. Pre-sweep, all instructions have pairwise-disjoint
/// qubit sets; post-sweep, CNOTs inside one MergeGroup may share exactly
/// one common control or common target.
struct Bucket {
  std::vector<Instruction> instructions;
  std::vector<MergeGroup> groups;  // post-sweep annotations

  friend bool operator==(const Bucket&, const Bucket&) = default;
};

struct BucketedCircuit {
  std::uint32_t qubit_count = 0;
  std::uint32_t classical_bit_count = 0;
  std::vector<Bucket> buckets;

  std::vector<Instruction> flatten() const;
  std::size_t instruction_count() const;
  std::size_t depth() const { return buckets.size(); }

  friend bool operator==(const BucketedCircuit&, const BucketedCircuit&) = default;
};

/// Configurable per-construct depth weights. Defaults reproduce the
/// 19-per-gate sequential cost and the 42-base parallel block cost, with
/// the parallel block growing by one per gate past size 2.
struct CostModel {
  std::uint32_t naive_cnot_cost = 19;
  std::uint32_t parallel_base_cost = 42;
  std::uint32_t parallel_increment = 1;
  std::uint32_t parallel_base_size = 2;
  std::uint32_t min_group_size_conservative = 3;
  std::uint32_t epr_cost = 1;

  std::uint64_t parallel_group_cost(std::uint32_t n) const {
    if (n < parallel_base_size) n = parallel_base_size;
    return parallel_base_cost +
           std::uint64_t{parallel_increment} * (n - parallel_base_size);
  }
  /// Throws std::invalid_argument when a field is out of range.
  void check() const;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

/// How one logical CNOT (or group) was expanded during compilation.
struct BlockInfo {
  enum class Kind : std::uint8_t {
    local_cnot,
    naive_cnot,
    parallel_shared_control,
    parallel_shared_target,
  };
  Kind kind = Kind::naive_cnot;
  std::uint32_t group_size = 1;
  std::uint32_t bucket = 0;   // logical bucket the block came from
  std::size_t first = 0;      // index of first emitted instruction
  std::size_t count = 0;      // number of emitted instructions
};

/// Fully decomposed circuit over flat physical qubit ids. Inter-node
/// interaction happens only through EPR pairs on communication qubits plus
/// local gates, measurements and conditioned Paulis.
struct PhysicalCircuit {
  std::string name;
  NodeTopology topology;
  Placement placement;
  std::uint32_t classical_bit_count = 0;
  /// Bits below this index were written by measurements of the source
  /// logical circuit; bits at or above it belong to protocol feed-forward.
  std::uint32_t logical_bit_count = 0;
  std::vector<Instruction> instructions;
  std::vector<BlockInfo> blocks;
};

enum class Mode : std::uint8_t { naive, conservative, relaxed };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_string(const std::string& s);

enum class PlacementPolicy : std::uint8_t { one_per_node, packed };

/// Naive-vs-optimized comparison record; one report row per (circuit, mode).
struct DepthReport {
  std::string name;
  std::uint32_t qubits = 0;
  std::uint32_t cnot_count = 0;
  std::uint64_t depth_naive = 0;
  std::uint64_t depth_opt = 0;
  std::uint64_t weighted_naive = 0;
  std::uint64_t weighted_opt = 0;
  double relative_improvement = 0.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::conservative;
};

}  // namespace dqcc
