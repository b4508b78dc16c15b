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

#include "dqcc/ir.hpp"

#include <algorithm>

namespace dqcc {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::MeasureZ: return "measz";
    case GateKind::MeasureX: return "measx";
    case GateKind::Reset: return "reset";
    case GateKind::EPR: return "epr";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

bool is_rotation(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX || k == GateKind::RY;
}

bool is_measurement(GateKind k) {
  return k == GateKind::MeasureZ || k == GateKind::MeasureX;
}

bool is_single_qubit_gate(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
      return true;
    default:
      return false;
  }
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::EPR:
      return 2;
    case GateKind::Barrier:
      return 0;
    default:
      return 1;
  }
}

std::uint32_t QubitRef::flat(const NodeTopology& topo) const {
  std::uint32_t base = node * topo.qubits_per_node();
  return role == QubitRole::communication ? base : base + 1 + local_index;
}

QubitRef QubitRef::from_flat(const NodeTopology& topo, std::uint32_t id) {
  std::uint32_t per = topo.qubits_per_node();
  std::uint32_t node = id / per;
  std::uint32_t rest = id % per;
  if (rest == 0) return comm(node);
  return mem(node, rest - 1);
}

bool QubitRef::valid_in(const NodeTopology& topo) const {
  if (node >= topo.node_count) return false;
  if (role == QubitRole::communication) return local_index == 0;
  return local_index < topo.memory_per_node;
}

std::string QubitRef::str() const {
  return "n" + std::to_string(node) +
         (role == QubitRole::communication ? ".e0"
                                           : ".m" + std::to_string(local_index));
}

Placement Placement::one_per_node(std::uint32_t logical_count) {
  Placement p;
  p.slots.reserve(logical_count);
  for (std::uint32_t i = 0; i < logical_count; ++i)
    p.slots.push_back(QubitRef::mem(i, 0));
  return p;
}

Placement Placement::packed(std::uint32_t logical_count, const NodeTopology& topo) {
  Placement p;
  p.slots.reserve(logical_count);
  for (std::uint32_t i = 0; i < logical_count; ++i)
    p.slots.push_back(
        QubitRef::mem(i / topo.memory_per_node, i % topo.memory_per_node));
  return p;
}

bool Placement::injective() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  seen.reserve(slots.size());
  for (const auto& q : slots) {
    if (q.role != QubitRole::memory) return false;
    seen.emplace_back(q.node, q.local_index);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::optional<std::uint32_t> Placement::free_memory_slot(
    std::uint32_t node, const NodeTopology& topo) const {
  for (std::uint32_t slot = topo.memory_per_node; slot-- > 0;) {
    bool taken = false;
    for (const auto& q : slots)
      if (q.node == node && q.local_index == slot) {
        taken = true;
        break;
      }
    if (!taken) return slot;
  }
  return std::nullopt;
}

Instruction make_gate(GateKind k, std::uint32_t q) {
  Instruction i;
  i.kind = k;
  i.operands = {q};
  return i;
}

Instruction make_gate(GateKind k, std::uint32_t a, std::uint32_t b) {
  Instruction i;
  i.kind = k;
  i.operands = {a, b};
  return i;
}

Instruction make_rotation(GateKind k, double theta, std::uint32_t q) {
  Instruction i;
  i.kind = k;
  i.theta = theta;
  i.operands = {q};
  return i;
}

Instruction make_measure(GateKind k, std::uint32_t q, std::uint32_t bit) {
  Instruction i;
  i.kind = k;
  i.operands = {q};
  i.writes = bit;
  return i;
}

Instruction make_barrier() {
  Instruction i;
  i.kind = GateKind::Barrier;
  return i;
}

std::span<const std::uint32_t> qubits_of(const Instruction& instr) {
  return {instr.operands.data(), instr.operands.size()};
}

std::vector<Instruction> BucketedCircuit::flatten() const {
  std::vector<Instruction> out;
  out.reserve(instruction_count());
  for (const auto& b : buckets)
    out.insert(out.end(), b.instructions.begin(), b.instructions.end());
  return out;
}

std::size_t BucketedCircuit::instruction_count() const {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.instructions.size();
  return n;
}

void CostModel::check() const {
  auto positive = [](std::uint32_t v, const char* what) {
    if (v == 0)
      throw std::invalid_argument(std::string(what) + " must be positive");
  };
  positive(naive_cnot_cost, "naive_cnot_cost");
  positive(parallel_base_cost, "parallel_base_cost");
  positive(parallel_increment, "parallel_increment");
  positive(parallel_base_size, "parallel_base_size");
  positive(min_group_size_conservative, "min_group_size_conservative");
  positive(epr_cost, "epr_cost");
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::naive: return "naive";
    case Mode::conservative: return "conservative";
    case Mode::relaxed: return "relaxed";
  }
  return "?";
}

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "naive") return Mode::naive;
  if (s == "conservative") return Mode::conservative;
  if (s == "relaxed") return Mode::relaxed;
  return std::nullopt;
}

}  // namespace dqcc
