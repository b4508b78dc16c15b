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

#include "dqcc/validate.hpp"

#include <set>

namespace dqcc {
namespace {

void check_common(const Instruction& in, std::size_t idx,
                  std::uint32_t qubit_count, std::uint32_t bit_count,
                  const std::vector<bool>& bit_written,
                  std::vector<Violation>& out) {
  int want = gate_arity(in.kind);
  if (static_cast<int>(in.operands.size()) != want) {
    out.push_back({idx, std::string(gate_name(in.kind)) + ": expected " +
                            std::to_string(want) + " operands, got " +
                            std::to_string(in.operands.size())});
    return;
  }
  for (std::uint32_t q : in.operands)
    if (q >= qubit_count)
      out.push_back({idx, "qubit out of range: " + std::to_string(q)});
  std::set<std::uint32_t> uniq(in.operands.begin(), in.operands.end());
  if (uniq.size() != in.operands.size())
    out.push_back({idx, "duplicate operand"});

  if (is_measurement(in.kind)) {
    if (!in.writes)
      out.push_back({idx, "measurement writes no classical bit"});
    else if (*in.writes >= bit_count)
      out.push_back({idx, "classical bit out of range: " +
                              std::to_string(*in.writes)});
  } else if (in.writes) {
    out.push_back({idx, "non-measurement writes a classical bit"});
  }

  if (in.condition) {
    if (in.condition->bits.empty())
      out.push_back({idx, "empty condition bit set"});
    if (in.condition->parity > 1)
      out.push_back({idx, "condition parity must be 0 or 1"});
    for (std::uint32_t b : in.condition->bits) {
      if (b >= bit_count)
        out.push_back({idx, "condition bit out of range: " + std::to_string(b)});
      else if (!bit_written[b])
        out.push_back({idx, "acausal condition: bit " + std::to_string(b) +
                                " not yet written"});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const LogicalCircuit& c) {
  std::vector<Violation> out;
  std::vector<bool> written(c.classical_bit_count, false);
  for (std::size_t i = 0; i < c.instructions.size(); ++i) {
    const Instruction& in = c.instructions[i];
    switch (in.kind) {
      case GateKind::EPR:
      case GateKind::SWAP:
      case GateKind::MeasureX:
      case GateKind::Reset:
        out.push_back({i, std::string("gate not in the logical subset: ") +
                              gate_name(in.kind)});
        break;
      default:
        break;
    }
    if (in.condition)
      out.push_back({i, "logical circuits must not carry conditions"});
    check_common(in, i, c.qubit_count, c.classical_bit_count, written, out);
    if (in.writes && *in.writes < c.classical_bit_count)
      written[*in.writes] = true;
  }
  return out;
}

std::vector<Violation> validate(const PhysicalCircuit& c) {
  std::vector<Violation> out;
  if (!c.placement.injective())
    out.push_back({Violation::global, "placement is not injective"});
  for (const auto& q : c.placement.slots)
    if (!q.valid_in(c.topology))
      out.push_back({Violation::global, "placement target out of range: " + q.str()});

  std::uint32_t nq = c.topology.total_qubits();
  std::vector<bool> written(c.classical_bit_count, false);
  // Communication qubits must be reset between uses; "fresh" means never
  // used or reset since the last use.
  std::vector<bool> comm_dirty(nq, false);

  for (std::size_t i = 0; i < c.instructions.size(); ++i) {
    const Instruction& in = c.instructions[i];
    check_common(in, i, nq, c.classical_bit_count, written, out);
    if (in.writes && *in.writes < c.classical_bit_count) written[*in.writes] = true;

    if (in.kind == GateKind::EPR && in.operands.size() == 2) {
      QubitRef a = QubitRef::from_flat(c.topology, in.operands[0]);
      QubitRef b = QubitRef::from_flat(c.topology, in.operands[1]);
      if (a.role != QubitRole::communication || b.role != QubitRole::communication)
        out.push_back({i, "epr operands must be communication qubits"});
      else if (a.node == b.node)
        out.push_back({i, "epr operands must be on distinct nodes"});
      for (std::uint32_t q : in.operands) {
        if (comm_dirty[q])
          out.push_back({i, "communication qubit reused without reset: " +
                                QubitRef::from_flat(c.topology, q).str()});
      }
    }
    for (std::uint32_t q : in.operands) {
      if (q >= nq) continue;
      bool is_comm =
          QubitRef::from_flat(c.topology, q).role == QubitRole::communication;
      if (!is_comm) continue;
      comm_dirty[q] = in.kind != GateKind::Reset;
    }
  }
  return out;
}

}  // namespace dqcc
