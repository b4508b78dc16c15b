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

#include <cstdlib>
#include <cstring>

#include "dqcc/sim/kernels.hpp"

namespace dqcc::sim {

bool cpu_supports_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* table = [] {
    const char* env = std::getenv("DQCC_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const KernelTable* avx2 = avx2_kernels();
    if (env && std::strcmp(env, "avx2") == 0 && avx2 && cpu_supports_avx2())
      return avx2;
    if (!env && avx2 && cpu_supports_avx2()) return avx2;
    return &scalar_kernels();
  }();
  return *table;
}

}  // namespace dqcc::sim
