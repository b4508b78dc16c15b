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

#include "dqcc/physfmt.hpp"

#include <cstdio>
#include <sstream>

namespace dqcc {
namespace {

std::string qubit_str(const PhysicalCircuit& c, std::uint32_t flat) {
  return QubitRef::from_flat(c.topology, flat).str();
}

std::uint32_t parse_qubit(const std::string& tok, const NodeTopology& topo,
                          int lineno) {
  // n<node>.<e|m><index>
  if (tok.size() < 4 || tok[0] != 'n')
    throw PhysFormatError("line " + std::to_string(lineno) +
                          ": bad qubit token '" + tok + "'");
  std::size_t dot = tok.find('.');
  if (dot == std::string::npos || dot + 1 >= tok.size())
    throw PhysFormatError("line " + std::to_string(lineno) +
                          ": bad qubit token '" + tok + "'");
  std::uint32_t node = std::stoul(tok.substr(1, dot - 1));
  char role = tok[dot + 1];
  std::uint32_t idx = std::stoul(tok.substr(dot + 2));
  QubitRef q = role == 'e' ? QubitRef::comm(node) : QubitRef::mem(node, idx);
  if (role != 'e' && role != 'm')
    throw PhysFormatError("line " + std::to_string(lineno) +
                          ": bad qubit role in '" + tok + "'");
  if (!q.valid_in(topo))
    throw PhysFormatError("line " + std::to_string(lineno) + ": qubit '" + tok +
                          "' outside the declared topology");
  return q.flat(topo);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string angle_str(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

}  // namespace

std::string emit_physical(const PhysicalCircuit& c) {
  std::string out = "# dqcc physical circuit\n";
  if (!c.name.empty()) out += "name " + c.name + "\n";
  out += "topology nodes=" + std::to_string(c.topology.node_count) +
         " memory=" + std::to_string(c.topology.memory_per_node) + "\n";
  for (std::size_t l = 0; l < c.placement.slots.size(); ++l)
    out += "placement " + std::to_string(l) + " -> " +
           c.placement.slots[l].str() + "\n";
  out += "bits " + std::to_string(c.classical_bit_count) + " logical " +
         std::to_string(c.logical_bit_count) + "\n";

  for (const Instruction& in : c.instructions) {
    std::string line = gate_name(in.kind);
    if (is_rotation(in.kind)) line += "(" + angle_str(in.theta) + ")";
    for (std::uint32_t q : in.operands) line += " " + qubit_str(c, q);
    if (in.writes) line += " -> c" + std::to_string(*in.writes);
    if (in.condition) {
      line += " ?parity(";
      for (std::size_t i = 0; i < in.condition->bits.size(); ++i) {
        if (i) line += ",";
        line += "c" + std::to_string(in.condition->bits[i]);
      }
      line += ")=" + std::to_string(static_cast<int>(in.condition->parity));
    }
    out += line + "\n";
  }
  return out;
}

PhysicalCircuit read_physical(const std::string& text) {
  PhysicalCircuit c;
  bool topo_seen = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];

    if (head == "name") {
      c.name = line.substr(5);
      continue;
    }
    if (head == "topology") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].rfind("nodes=", 0) == 0)
          c.topology.node_count = std::stoul(toks[i].substr(6));
        else if (toks[i].rfind("memory=", 0) == 0)
          c.topology.memory_per_node = std::stoul(toks[i].substr(7));
        else
          throw PhysFormatError("line " + std::to_string(lineno) +
                                ": unknown topology field '" + toks[i] + "'");
      }
      topo_seen = true;
      continue;
    }
    if (head == "placement") {
      if (toks.size() != 4 || toks[2] != "->")
        throw PhysFormatError("line " + std::to_string(lineno) +
                              ": malformed placement");
      std::size_t l = std::stoul(toks[1]);
      if (c.placement.slots.size() != l)
        throw PhysFormatError("line " + std::to_string(lineno) +
                              ": placement lines out of order");
      std::uint32_t flat = parse_qubit(toks[3], c.topology, lineno);
      c.placement.slots.push_back(QubitRef::from_flat(c.topology, flat));
      continue;
    }
    if (head == "bits") {
      if (toks.size() != 4 || toks[2] != "logical")
        throw PhysFormatError("line " + std::to_string(lineno) +
                              ": malformed bits line");
      c.classical_bit_count = std::stoul(toks[1]);
      c.logical_bit_count = std::stoul(toks[3]);
      continue;
    }

    if (!topo_seen)
      throw PhysFormatError("line " + std::to_string(lineno) +
                            ": instruction before topology header");

    Instruction in;
    std::string mnemonic = head;
    std::size_t paren = mnemonic.find('(');
    if (paren != std::string::npos) {
      std::string inner = mnemonic.substr(paren + 1);
      if (inner.empty() || inner.back() != ')')
        throw PhysFormatError("line " + std::to_string(lineno) +
                              ": malformed angle");
      in.theta = std::stod(inner.substr(0, inner.size() - 1));
      mnemonic = mnemonic.substr(0, paren);
    }
    bool found = false;
    for (int k = 0; k <= static_cast<int>(GateKind::Barrier); ++k) {
      if (mnemonic == gate_name(static_cast<GateKind>(k))) {
        in.kind = static_cast<GateKind>(k);
        found = true;
        break;
      }
    }
    if (!found)
      throw PhysFormatError("line " + std::to_string(lineno) +
                            ": unknown mnemonic '" + mnemonic + "'");

    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      if (t == "->") {
        if (i + 1 >= toks.size() || toks[i + 1][0] != 'c')
          throw PhysFormatError("line " + std::to_string(lineno) +
                                ": malformed measurement target");
        in.writes = std::stoul(toks[i + 1].substr(1));
        ++i;
        continue;
      }
      if (t[0] == '?') {
        if (t.rfind("?parity(", 0) != 0)
          throw PhysFormatError("line " + std::to_string(lineno) +
                                ": malformed condition '" + t + "'");
        std::size_t close = t.find(')');
        if (close == std::string::npos || close + 2 > t.size() ||
            t[close + 1] != '=')
          throw PhysFormatError("line " + std::to_string(lineno) +
                                ": malformed condition '" + t + "'");
        Condition cond;
        cond.parity = static_cast<std::uint8_t>(std::stoul(t.substr(close + 2)));
        std::string bits = t.substr(8, close - 8);
        std::size_t start = 0;
        while (start < bits.size()) {
          std::size_t comma = bits.find(',', start);
          std::string b = bits.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start);
          if (b.empty() || b[0] != 'c')
            throw PhysFormatError("line " + std::to_string(lineno) +
                                  ": malformed condition bit '" + b + "'");
          cond.bits.push_back(std::stoul(b.substr(1)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        in.condition = std::move(cond);
        continue;
      }
      in.operands.push_back(parse_qubit(t, c.topology, lineno));
    }
    c.instructions.push_back(std::move(in));
  }
  if (!topo_seen) throw PhysFormatError("missing topology header");
  return c;
}

}  // namespace dqcc
