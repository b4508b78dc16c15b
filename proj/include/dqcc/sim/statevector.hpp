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

#include <span>
#include <vector>

#include "dqcc/ir.hpp"
#include "dqcc/sim/kernels.hpp"

namespace dqcc::sim {

/// Dense statevector over up to 16 qubits; qubit k maps to bit k of the
/// amplitude index. All gate applications go through the kernel table
/// chosen at construction.
class Statevector {
 public:
  static constexpr std::uint32_t kMaxQubits = 16;

  explicit Statevector(std::uint32_t qubits,
                       const KernelTable& kernels = active_kernels());

  std::uint32_t qubit_count() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cx> amplitudes() const { return amps_; }
  std::span<cx> amplitudes() { return amps_; }
  const KernelTable& kernels() const { return *kernels_; }

  void set_zero_state();
  void set_basis_state(std::size_t index);

  /// Applies a unitary gate (not EPR/measure/reset — the simulator handles
  /// those). theta is read for RZ/RX/RY only.
  void apply_unitary(GateKind kind, double theta,
                     std::span<const std::uint32_t> operands);

  void apply_1q(std::uint32_t q, const cx u[4]) {
    kernels_->apply_1q(amps_.data(), amps_.size(), q, u);
  }
  void h(std::uint32_t q);
  void x(std::uint32_t q) { kernels_->apply_x(amps_.data(), amps_.size(), q); }
  void cnot(std::uint32_t c, std::uint32_t t) {
    kernels_->apply_cnot(amps_.data(), amps_.size(), c, t);
  }
  void cz(std::uint32_t a, std::uint32_t b) {
    kernels_->apply_cz(amps_.data(), amps_.size(), a, b);
  }
  void swap(std::uint32_t a, std::uint32_t b) {
    kernels_->apply_swap(amps_.data(), amps_.size(), a, b);
  }

  double prob_one(std::uint32_t q) const {
    return kernels_->prob_one(amps_.data(), amps_.size(), q);
  }
  void project(std::uint32_t q, int keep, double scale) {
    kernels_->project(amps_.data(), amps_.size(), q, keep, scale);
  }
  double norm2() const { return kernels_->norm2(amps_.data(), amps_.size()); }
  cx inner(const Statevector& other) const;
  void scale(double s) { kernels_->scale(amps_.data(), amps_.size(), s); }

 private:
  std::uint32_t qubits_;
  const KernelTable* kernels_;
  std::vector<cx> amps_;
};

/// |<a|b>|^2; global-phase invariant. Inputs must be same-dimension and
/// normalized within 1e-9.
double state_fidelity(std::span<const cx> a, std::span<const cx> b);

}  // namespace dqcc::sim
