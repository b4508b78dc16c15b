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

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error("line " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

struct UnsupportedGateError : ParseError {
  std::string gate;
  UnsupportedGateError(const std::string& g, int line_, int col_)
      : ParseError("unsupported gate '" + g + "'", line_, col_), gate(g) {}
};

/// Parses the OpenQASM 2.0 subset: qreg/creg declarations, the gates
/// {h,x,y,z,s,sdg,t,tdg,rz,rx,ry,cx,cz,swap}, measure and barrier. Multiple
/// registers flatten to one index space in declaration order; swap expands
/// to three cx; barriers become full scheduling fences.
LogicalCircuit parse_qasm(const std::string& text,
                          const std::string& name = "qasm");

/// Inverse of parse_qasm on the logical subset (modulo whitespace and
/// register flattening).
std::string emit_qasm(const LogicalCircuit& c);

}  // namespace dqcc
