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

// AVX2+FMA statevector kernels. Compiled with per-function target
// attributes so the translation unit stays portable; the dispatcher only
// hands out this table after a runtime CPU check.

#include "dqcc/sim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <utility>

#define DQCC_AVX2 __attribute__((target("avx2,fma")))

namespace dqcc::sim {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

DQCC_AVX2 inline __m256d cmul_broadcast(cx u, __m256d x) {
  __m256d ur = _mm256_set1_pd(u.real());
  __m256d ui = _mm256_set1_pd(u.imag());
  __m256d xs = _mm256_permute_pd(x, 0x5);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(ur, x, _mm256_mul_pd(ui, xs));
}

// Element-wise complex multiply of lane pairs: u = [u0, u1], x = [x0, x1].
DQCC_AVX2 inline __m256d cmul_vv(__m256d u, __m256d x) {
  __m256d ur = _mm256_movedup_pd(u);        // [u0r, u0r, u1r, u1r]
  __m256d ui = _mm256_permute_pd(u, 0xF);   // [u0i, u0i, u1i, u1i]
  __m256d xs = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(ur, x, _mm256_mul_pd(ui, xs));
}

DQCC_AVX2 inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

DQCC_AVX2 void v_apply_1q(cx* a, std::size_t n, std::uint32_t k, const cx* u) {
  double* d = reinterpret_cast<double*>(a);
  if (k == 0) {
    if (n < 4) {  // single-qubit register: one pair
      cx a0 = a[0], a1 = a[1];
      a[0] = u[0] * a0 + u[1] * a1;
      a[1] = u[2] * a0 + u[3] * a1;
      return;
    }
    for (std::size_t i = 0; i < n; i += 4) {
      __m256d va = _mm256_loadu_pd(d + 2 * i);      // pair 0: [a0, a1]
      __m256d vb = _mm256_loadu_pd(d + 2 * i + 4);  // pair 1
      __m256d lo = _mm256_permute2f128_pd(va, vb, 0x20);  // [a0, a0']
      __m256d hi = _mm256_permute2f128_pd(va, vb, 0x31);  // [a1, a1']
      __m256d nlo = _mm256_add_pd(cmul_broadcast(u[0], lo), cmul_broadcast(u[1], hi));
      __m256d nhi = _mm256_add_pd(cmul_broadcast(u[2], lo), cmul_broadcast(u[3], hi));
      _mm256_storeu_pd(d + 2 * i, _mm256_permute2f128_pd(nlo, nhi, 0x20));
      _mm256_storeu_pd(d + 2 * i + 4, _mm256_permute2f128_pd(nlo, nhi, 0x31));
    }
    return;
  }
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; off += 2) {
      double* p0 = d + 2 * (base + off);
      double* p1 = d + 2 * (base + off + mask);
      __m256d x0 = _mm256_loadu_pd(p0);
      __m256d x1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, _mm256_add_pd(cmul_broadcast(u[0], x0),
                                         cmul_broadcast(u[1], x1)));
      _mm256_storeu_pd(p1, _mm256_add_pd(cmul_broadcast(u[2], x0),
                                         cmul_broadcast(u[3], x1)));
    }
}

DQCC_AVX2 void v_apply_diag1(cx* a, std::size_t n, std::uint32_t k, cx d0, cx d1) {
  double* d = reinterpret_cast<double*>(a);
  if (k == 0) {
    if (n < 4) {
      a[0] *= d0;
      a[1] *= d1;
      return;
    }
    __m256d dd = _mm256_set_pd(d1.imag(), d1.real(), d0.imag(), d0.real());
    for (std::size_t i = 0; i < n; i += 2) {
      __m256d x = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, cmul_vv(dd, x));
    }
    return;
  }
  std::size_t mask = std::size_t{1} << k;
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; off += 2) {
      double* p0 = d + 2 * (base + off);
      double* p1 = d + 2 * (base + off + mask);
      _mm256_storeu_pd(p0, cmul_broadcast(d0, _mm256_loadu_pd(p0)));
      _mm256_storeu_pd(p1, cmul_broadcast(d1, _mm256_loadu_pd(p1)));
    }
}

DQCC_AVX2 void v_apply_x(cx* a, std::size_t n, std::uint32_t k) {
  double* d = reinterpret_cast<double*>(a);
  std::size_t mask = std::size_t{1} << k;
  if (k == 0) {
    if (n < 4) {
      std::swap(a[0], a[1]);
      return;
    }
    for (std::size_t i = 0; i < n; i += 2) {
      __m256d x = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, _mm256_permute2f128_pd(x, x, 0x01));
    }
    return;
  }
  for (std::size_t base = 0; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; off += 2) {
      double* p0 = d + 2 * (base + off);
      double* p1 = d + 2 * (base + off + mask);
      __m256d x0 = _mm256_loadu_pd(p0);
      __m256d x1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, x1);
      _mm256_storeu_pd(p1, x0);
    }
}

DQCC_AVX2 void v_apply_cnot(cx* a, std::size_t n, std::uint32_t c, std::uint32_t t) {
  std::size_t cm = std::size_t{1} << c;
  std::size_t tm = std::size_t{1} << t;
  double* d = reinterpret_cast<double*>(a);
  if (t == 0) {
    // Swap adjacent pairs gated on the control bit (c >= 1 since c != t).
    for (std::size_t i = 0; i < n; i += 2) {
      if (!(i & cm)) continue;
      __m256d x = _mm256_loadu_pd(d + 2 * i);
      _mm256_storeu_pd(d + 2 * i, _mm256_permute2f128_pd(x, x, 0x01));
    }
    return;
  }
  if (c == 0) {
    for (std::size_t base = 0; base < n; base += 2 * tm)
      for (std::size_t off = 1; off < tm; off += 2)
        std::swap(a[base + off], a[base + off + tm]);
    return;
  }
  // i = base | off with disjoint bit ranges; the control bit sits in
  // exactly one of them, so the gate test is uniform over each vector.
  for (std::size_t base = 0; base < n; base += 2 * tm)
    for (std::size_t off = 0; off < tm; off += 2) {
      if (!((base | off) & cm)) continue;
      double* p0 = d + 2 * (base + off);
      double* p1 = d + 2 * (base + off + tm);
      __m256d x0 = _mm256_loadu_pd(p0);
      __m256d x1 = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, x1);
      _mm256_storeu_pd(p1, x0);
    }
}

DQCC_AVX2 void v_apply_cz(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q) {
  std::size_t pm = std::size_t{1} << p;
  std::size_t qm = std::size_t{1} << q;
  std::size_t lo = pm < qm ? pm : qm;
  double* d = reinterpret_cast<double*>(a);
  const __m256d neg = _mm256_set1_pd(-0.0);
  if (lo >= 2) {
    // Indices with both bits set come in contiguous runs of `lo` complexes.
    for (std::size_t base = 0; base < n; base += lo) {
      if (!((base & pm) && (base & qm))) continue;
      for (std::size_t off = 0; off < lo; off += 2) {
        double* pd = d + 2 * (base + off);
        _mm256_storeu_pd(pd, _mm256_xor_pd(_mm256_loadu_pd(pd), neg));
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if ((i & pm) && (i & qm)) a[i] = -a[i];
}

DQCC_AVX2 double v_prob_one(const cx* a, std::size_t n, std::uint32_t k) {
  std::size_t mask = std::size_t{1} << k;
  const double* d = reinterpret_cast<const double*>(a);
  if (mask < 2) {
    double p = 0.0;
    for (std::size_t i = 1; i < n; i += 2)
      p += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return p;
  }
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t base = mask; base < n; base += 2 * mask)
    for (std::size_t off = 0; off < mask; off += 2) {
      __m256d x = _mm256_loadu_pd(d + 2 * (base + off));
      acc = _mm256_fmadd_pd(x, x, acc);
    }
  return hsum(acc);
}

DQCC_AVX2 void v_project(cx* a, std::size_t n, std::uint32_t k, int keep,
                         double scale) {
  std::size_t mask = std::size_t{1} << k;
  double* d = reinterpret_cast<double*>(a);
  if (mask < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<int>((i & mask) != 0) == keep)
        a[i] *= scale;
      else
        a[i] = 0.0;
    }
    return;
  }
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d vz = _mm256_setzero_pd();
  for (std::size_t base = 0; base < n; base += mask) {
    bool kept = static_cast<int>((base & mask) != 0) == keep;
    for (std::size_t off = 0; off < mask; off += 2) {
      double* pd = d + 2 * (base + off);
      if (kept)
        _mm256_storeu_pd(pd, _mm256_mul_pd(_mm256_loadu_pd(pd), vs));
      else
        _mm256_storeu_pd(pd, vz);
    }
  }
}

DQCC_AVX2 double v_norm2(const cx* a, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d x = _mm256_loadu_pd(d + 2 * i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double p = hsum(acc);
  for (; i < n; ++i) p += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return p;
}

DQCC_AVX2 cx v_inner(const cx* a, const cx* b, std::size_t n) {
  const double* da = reinterpret_cast<const double*>(a);
  const double* db = reinterpret_cast<const double*>(b);
  const __m256d signs = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(da + 2 * i);
    __m256d vb = _mm256_loadu_pd(db + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);  // ar*br + ai*bi per lane pair
    __m256d vas = _mm256_permute_pd(va, 0x5);  // [ai, ar]
    // ar*bi - ai*br: negate the even lane of (ai*br, ar*bi).
    acc_im = _mm256_add_pd(acc_im,
                           _mm256_xor_pd(_mm256_mul_pd(vas, vb), signs));
  }
  cx acc(hsum(acc_re), hsum(acc_im));
  for (; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

DQCC_AVX2 void v_scale(cx* a, std::size_t n, double s) {
  double* d = reinterpret_cast<double*>(a);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), vs));
  for (; i < n; ++i) a[i] *= s;
}

// SWAP is a rare permutation (GHZ buffer moves); scalar is fine.
void v_apply_swap(cx* a, std::size_t n, std::uint32_t p, std::uint32_t q) {
  std::size_t pm = std::size_t{1} << p;
  std::size_t qm = std::size_t{1} << q;
  for (std::size_t i = 0; i < n; ++i)
    if ((i & pm) && !(i & qm)) std::swap(a[i], a[(i ^ pm) | qm]);
}

constexpr KernelTable kAvx2 = {
    "avx2",     v_apply_1q, v_apply_diag1, v_apply_x, v_apply_cnot,
    v_apply_cz, v_apply_swap, v_prob_one,  v_project, v_norm2,
    v_inner,    v_scale,
};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace dqcc::sim

#else

namespace dqcc::sim {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace dqcc::sim

#endif
