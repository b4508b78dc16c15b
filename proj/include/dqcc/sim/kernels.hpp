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

#include <complex>
#include <cstddef>
#include <cstdint>

namespace dqcc::sim {

using cx = std::complex<double>;

// Dense statevector inner loops. The scalar table is the reference
// implementation; the AVX2 table is selected at runtime on hardware that
// supports it and is equivalence-tested against scalar. `n` is the vector
// length (a power of two), `k`/`c`/`t` are qubit bit positions.
//
// The matrix u is row-major: {u00, u01, u10, u11} acting on (a_k=0, a_k=1).
struct KernelTable {
  const char* name;
  void (*apply_1q)(cx* a, std::size_t n, std::uint32_t k, const cx* u);
  void (*apply_diag1)(cx* a, std::size_t n, std::uint32_t k, cx d0, cx d1);
  void (*apply_x)(cx* a, std::size_t n, std::uint32_t k);
  void (*apply_cnot)(cx* a, std::size_t n, std::uint32_t c, std::uint32_t t);
  void (*apply_cz)(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q);
  void (*apply_swap)(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q);
  double (*prob_one)(const cx* a, std::size_t n, std::uint32_t k);
  // Keeps the k=keep half, zeroes the other, multiplies the kept half by
  // `scale` (renormalization after a projective measurement).
  void (*project)(cx* a, std::size_t n, std::uint32_t k, int keep, double scale);
  double (*norm2)(const cx* a, std::size_t n);
  cx (*inner)(const cx* a, const cx* b, std::size_t n);
  void (*scale)(cx* a, std::size_t n, double s);
};

const KernelTable& scalar_kernels();

/// AVX2+FMA variants; nullptr when the build target cannot carry them.
const KernelTable* avx2_kernels();

bool cpu_supports_avx2();

/// Table chosen at startup: AVX2 when the CPU supports it, else scalar.
/// DQCC_KERNELS=scalar|avx2 overrides the choice.
const KernelTable& active_kernels();

}  // namespace dqcc::sim
