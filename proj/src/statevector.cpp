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

#include "dqcc/sim/statevector.hpp"

#include <cmath>

namespace dqcc::sim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Statevector::Statevector(std::uint32_t qubits, const KernelTable& kernels)
    : qubits_(qubits), kernels_(&kernels) {
  if (qubits > kMaxQubits)
    throw std::runtime_error("statevector limited to " +
                             std::to_string(kMaxQubits) + " qubits, got " +
                             std::to_string(qubits));
  amps_.assign(std::size_t{1} << qubits, cx{0.0, 0.0});
  amps_[0] = 1.0;
}

void Statevector::set_zero_state() { set_basis_state(0); }

void Statevector::set_basis_state(std::size_t index) {
  std::fill(amps_.begin(), amps_.end(), cx{0.0, 0.0});
  amps_.at(index) = 1.0;
}

void Statevector::h(std::uint32_t q) {
  const cx u[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  apply_1q(q, u);
}

void Statevector::apply_unitary(GateKind kind, double theta,
                                std::span<const std::uint32_t> operands) {
  auto diag = [&](cx d0, cx d1) {
    kernels_->apply_diag1(amps_.data(), amps_.size(), operands[0], d0, d1);
  };
  switch (kind) {
    case GateKind::H:
      h(operands[0]);
      return;
    case GateKind::X:
      x(operands[0]);
      return;
    case GateKind::Y: {
      const cx u[4] = {0.0, cx(0.0, -1.0), cx(0.0, 1.0), 0.0};
      apply_1q(operands[0], u);
      return;
    }
    case GateKind::Z:
      diag(1.0, -1.0);
      return;
    case GateKind::S:
      diag(1.0, cx(0.0, 1.0));
      return;
    case GateKind::Sdg:
      diag(1.0, cx(0.0, -1.0));
      return;
    case GateKind::T:
      diag(1.0, cx(kInvSqrt2, kInvSqrt2));
      return;
    case GateKind::Tdg:
      diag(1.0, cx(kInvSqrt2, -kInvSqrt2));
      return;
    case GateKind::RZ:
      diag(std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2));
      return;
    case GateKind::RX: {
      double c = std::cos(theta / 2), s = std::sin(theta / 2);
      const cx u[4] = {c, cx(0.0, -s), cx(0.0, -s), c};
      apply_1q(operands[0], u);
      return;
    }
    case GateKind::RY: {
      double c = std::cos(theta / 2), s = std::sin(theta / 2);
      const cx u[4] = {c, -s, s, c};
      apply_1q(operands[0], u);
      return;
    }
    case GateKind::CNOT:
      cnot(operands[0], operands[1]);
      return;
    case GateKind::CZ:
      cz(operands[0], operands[1]);
      return;
    case GateKind::SWAP:
      swap(operands[0], operands[1]);
      return;
    case GateKind::Barrier:
      return;
    default:
      throw std::runtime_error(std::string("apply_unitary: not a unitary: ") +
                               gate_name(kind));
  }
}

cx Statevector::inner(const Statevector& other) const {
  if (dim() != other.dim())
    throw std::runtime_error("inner: dimension mismatch");
  return kernels_->inner(amps_.data(), other.amps_.data(), amps_.size());
}

double state_fidelity(std::span<const cx> a, std::span<const cx> b) {
  if (a.size() != b.size())
    throw std::runtime_error("state_fidelity: dimension mismatch");
  const KernelTable& k = active_kernels();
  double na = k.norm2(a.data(), a.size());
  double nb = k.norm2(b.data(), b.size());
  if (std::abs(na - 1.0) > 1e-9 || std::abs(nb - 1.0) > 1e-9)
    throw std::runtime_error("state_fidelity: states must be normalized");
  cx ip = k.inner(a.data(), b.data(), a.size());
  return ip.real() * ip.real() + ip.imag() * ip.imag();
}

}  // namespace dqcc::sim
