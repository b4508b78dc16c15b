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

/// Bernstein-Vazirani over n data qubits with the given secret bit string
/// (secret[i] = '1' adds CNOT(i, n), a shared-target chain onto the
/// ancilla). Measures the data qubits into bits 0..n-1.
LogicalCircuit gen_bv(std::uint32_t n, const std::string& secret);

enum class DjOracle : std::uint8_t { constant0, constant1, balanced };

/// Deutsch-Jozsa over n data qubits. balanced uses mask[i] = '1' =>
/// CNOT(i, n); constant1 flips the ancilla; constant0 is the identity.
LogicalCircuit gen_dj(std::uint32_t n, DjOracle oracle,
                      const std::string& mask = {});

enum class RandomPattern : std::uint8_t { uniform, fanout_heavy, fanin_heavy };

const char* pattern_name(RandomPattern p);
std::optional<RandomPattern> pattern_from_string(const std::string& s);

/// Seeded structured random circuits. uniform draws gates i.i.d. from the
/// logical subset; fanout_heavy inflates runs of CNOTs sharing a control;
/// fanin_heavy inflates shared-target runs. Deterministic per seed.
LogicalCircuit gen_random(std::uint32_t n, std::uint32_t gate_count,
                          std::uint64_t seed, RandomPattern pattern);

}  // namespace dqcc
