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

#include "dqcc/generators.hpp"

#include <random>

namespace dqcc {
namespace {

void check_bits(const std::string& s, std::uint32_t n, const char* what) {
  if (s.size() != n)
    throw std::invalid_argument(std::string(what) + " must have length " +
                                std::to_string(n) + ", got " +
                                std::to_string(s.size()));
  for (char c : s)
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string(what) +
                                  " must be a bit string, got '" + s + "'");
}

// H frame shared by BV and DJ: data qubits in |+>, ancilla in |->.
void open_frame(LogicalCircuit& c, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i)
    c.instructions.push_back(make_gate(GateKind::H, i));
  c.instructions.push_back(make_gate(GateKind::X, n));
  c.instructions.push_back(make_gate(GateKind::H, n));
}

void close_frame(LogicalCircuit& c, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i)
    c.instructions.push_back(make_gate(GateKind::H, i));
  for (std::uint32_t i = 0; i < n; ++i)
    c.instructions.push_back(make_measure(GateKind::MeasureZ, i, i));
}

}  // namespace

LogicalCircuit gen_bv(std::uint32_t n, const std::string& secret) {
  if (n < 1) throw std::invalid_argument("gen_bv: n must be >= 1");
  check_bits(secret, n, "secret");
  LogicalCircuit c;
  c.name = "bv_n" + std::to_string(n) + "_s" + secret;
  c.qubit_count = n + 1;
  c.classical_bit_count = n;
  open_frame(c, n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (secret[i] == '1')
      c.instructions.push_back(make_gate(GateKind::CNOT, i, n));
  close_frame(c, n);
  return c;
}

LogicalCircuit gen_dj(std::uint32_t n, DjOracle oracle, const std::string& mask) {
  if (n < 1) throw std::invalid_argument("gen_dj: n must be >= 1");
  LogicalCircuit c;
  c.qubit_count = n + 1;
  c.classical_bit_count = n;
  switch (oracle) {
    case DjOracle::constant0:
      c.name = "dj_n" + std::to_string(n) + "_constant0";
      open_frame(c, n);
      break;
    case DjOracle::constant1:
      c.name = "dj_n" + std::to_string(n) + "_constant1";
      open_frame(c, n);
      c.instructions.push_back(make_gate(GateKind::X, n));
      break;
    case DjOracle::balanced: {
      check_bits(mask, n, "mask");
      if (mask.find('1') == std::string::npos)
        throw std::invalid_argument("balanced mask needs at least one set bit");
      c.name = "dj_n" + std::to_string(n) + "_balanced_" + mask;
      open_frame(c, n);
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask[i] == '1')
          c.instructions.push_back(make_gate(GateKind::CNOT, i, n));
      break;
    }
  }
  close_frame(c, n);
  return c;
}

const char* pattern_name(RandomPattern p) {
  switch (p) {
    case RandomPattern::uniform: return "uniform";
    case RandomPattern::fanout_heavy: return "fanout_heavy";
    case RandomPattern::fanin_heavy: return "fanin_heavy";
  }
  return "?";
}

std::optional<RandomPattern> pattern_from_string(const std::string& s) {
  if (s == "uniform") return RandomPattern::uniform;
  if (s == "fanout_heavy") return RandomPattern::fanout_heavy;
  if (s == "fanin_heavy") return RandomPattern::fanin_heavy;
  return std::nullopt;
}

LogicalCircuit gen_random(std::uint32_t n, std::uint32_t gate_count,
                          std::uint64_t seed, RandomPattern pattern) {
  if (n < 2) throw std::invalid_argument("gen_random: n must be >= 2");
  if (gate_count < 1)
    throw std::invalid_argument("gen_random: gate_count must be >= 1");

  LogicalCircuit c;
  c.name = std::string("random_") + pattern_name(pattern) + "_n" +
           std::to_string(n) + "_g" + std::to_string(gate_count) + "_s" +
           std::to_string(seed);
  c.qubit_count = n;
  c.classical_bit_count = 0;

  // rng() % k keeps the stream platform-stable, unlike the distribution
  // adaptors; the bias is irrelevant here.
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint32_t k) {
    return static_cast<std::uint32_t>(rng() % k);
  };
  auto pick_other = [&](std::uint32_t q) {
    return (q + 1 + pick(n - 1)) % n;
  };
  auto theta = [&] { return (pick(62831) + 1) / 10000.0; };

  static const GateKind kUniform[16] = {
      GateKind::H,    GateKind::X,    GateKind::Y,    GateKind::Z,
      GateKind::S,    GateKind::Sdg,  GateKind::T,    GateKind::Tdg,
      GateKind::RZ,   GateKind::RX,   GateKind::RY,   GateKind::CZ,
      GateKind::CNOT, GateKind::CNOT, GateKind::CNOT, GateKind::CNOT,
  };
  static const GateKind kDiagonal[4] = {GateKind::Z, GateKind::S, GateKind::T,
                                        GateKind::RZ};

  auto emit_uniform = [&] {
    GateKind k = kUniform[pick(16)];
    if (k == GateKind::CNOT || k == GateKind::CZ) {
      std::uint32_t a = pick(n);
      c.instructions.push_back(make_gate(k, a, pick_other(a)));
    } else if (is_rotation(k)) {
      c.instructions.push_back(make_rotation(k, theta(), pick(n)));
    } else {
      c.instructions.push_back(make_gate(k, pick(n)));
    }
  };

  while (c.instructions.size() < gate_count) {
    std::uint32_t remaining =
        gate_count - static_cast<std::uint32_t>(c.instructions.size());
    if (pattern == RandomPattern::uniform) {
      emit_uniform();
      continue;
    }
    std::uint32_t roll = pick(100);
    if (roll < 45 && n >= 3) {
      // A run of CNOTs sharing one qubit: fan-out from a control or fan-in
      // onto a target.
      std::uint32_t shared = pick(n);
      std::uint32_t len = std::min({2 + pick(3), n - 1, remaining});
      std::vector<bool> used(n, false);
      used[shared] = true;
      for (std::uint32_t i = 0; i < len; ++i) {
        std::uint32_t other = pick(n);
        while (used[other]) other = (other + 1) % n;
        used[other] = true;
        if (pattern == RandomPattern::fanout_heavy)
          c.instructions.push_back(make_gate(GateKind::CNOT, shared, other));
        else
          c.instructions.push_back(make_gate(GateKind::CNOT, other, shared));
      }
    } else if (roll < 62) {
      GateKind k = kDiagonal[pick(4)];
      if (is_rotation(k))
        c.instructions.push_back(make_rotation(k, theta(), pick(n)));
      else
        c.instructions.push_back(make_gate(k, pick(n)));
    } else {
      emit_uniform();
    }
  }
  return c;
}

}  // namespace dqcc
