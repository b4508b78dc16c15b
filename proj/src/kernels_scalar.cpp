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

#include "dqcc/sim/kernels.hpp"

#include <utility>

namespace dqcc::sim {
namespace {

void s_apply_1q(cx* a, std::size_t n, std::uint32_t k, const cx* u) {
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; ++off) {
      cx a0 = a[base + off];
      cx a1 = a[base + off + mask];
      a[base + off] = u[0] * a0 + u[1] * a1;
      a[base + off + mask] = u[2] * a0 + u[3] * a1;
    }
}

void s_apply_diag1(cx* a, std::size_t n, std::uint32_t k, cx d0, cx d1) {
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; ++off) {
      a[base + off] *= d0;
      a[base + off + mask] *= d1;
    }
}

void s_apply_x(cx* a, std::size_t n, std::uint32_t k) {
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; ++off)
      std::swap(a[base + off], a[base + off + mask]);
}

void s_apply_cnot(cx* a, std::size_t n, std::uint32_t c, std::uint32_t t) {
  std::size_t cm = std::size_t{1} << c;
  std::size_t tm = std::size_t{1} << t;
  for (std::size_t i = 0; i < n; ++i)
    if ((i & cm) && !(i & tm)) std::swap(a[i], a[i | tm]);
}

void s_apply_cz(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q) {
  std::size_t pm = std::size_t{1} << p;
  std::size_t qm = std::size_t{1} << q;
  for (std::size_t i = 0; i < n; ++i)
    if ((i & pm) && (i & qm)) a[i] = -a[i];
}

void s_apply_swap(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q) {
  std::size_t pm = std::size_t{1} << p;
  std::size_t qm = std::size_t{1} << q;
  for (std::size_t i = 0; i < n; ++i)
    if ((i & pm) && !(i & qm)) std::swap(a[i], a[(i ^ pm) | qm]);
}

double s_prob_one(const cx* a, std::size_t n, std::uint32_t k) {
  std::size_t mask = std::size_t{1} << k;
  double p = 0.0;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; ++off) {
      cx v = a[base + off + mask];
      p += v.real() * v.real() + v.imag() * v.imag();
    }
  return p;
}

void s_project(cx* a, std::size_t n, std::uint32_t k, int keep, double scale) {
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>((i & mask) != 0) == keep)
      a[i] *= scale;
    else
      a[i] = 0.0;
  }
}

double s_norm2(const cx* a, std::size_t n) {
  double p = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    p += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return p;
}

cx s_inner(const cx* a, const cx* b, std::size_t n) {
  cx acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void s_scale(cx* a, std::size_t n, double s) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

constexpr KernelTable kScalar = {
    "scalar",    s_apply_1q, s_apply_diag1, s_apply_x, s_apply_cnot,
    s_apply_cz,  s_apply_swap, s_prob_one,  s_project, s_norm2,
    s_inner,     s_scale,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace dqcc::sim
