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

struct Violation {
  std::size_t instruction;  // index into the circuit, or npos for global
  std::string message;

  static constexpr std::size_t global = static_cast<std::size_t>(-1);
};

/// Structural checks for a logical circuit: operand bounds and arity,
/// logical gate subset (no EPR, no conditions), classical-bit causality.
/// Returns all violations found; empty means ok.
std::vector<Violation> validate(const LogicalCircuit& c);

/// Checks for a compiled circuit: qubit ids within the topology, EPR on
/// communication qubits of distinct nodes, communication qubits reset
/// before reuse, condition causality, placement injectivity.
std::vector<Violation> validate(const PhysicalCircuit& c);

}  // namespace dqcc
