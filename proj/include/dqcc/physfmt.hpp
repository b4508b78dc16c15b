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

struct PhysFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line-oriented text form of a compiled circuit: header lines declare the
/// topology, placement and classical bits; one instruction per line with
/// operands as n<node>.<e|m><index>, measurements as `measz n0.e0 -> c3`
/// and parity conditions as a `?parity(c1,c2)=1` suffix.
std::string emit_physical(const PhysicalCircuit& c);

/// Inverse of emit_physical; emit(read(emit(c))) is byte-identical to
/// emit(c). Block annotations are not part of the format.
PhysicalCircuit read_physical(const std::string& text);

}  // namespace dqcc
