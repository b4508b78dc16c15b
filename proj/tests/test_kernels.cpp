#include <doctest.h>

#include <random>

#include "dqcc/sim/kernels.hpp"

using namespace dqcc::sim;

namespace {

std::vector<cx> random_amps(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto u = [&] { return ((rng() >> 11) + 0.5) * 0x1.0p-53 - 0.5; };
  std::vector<cx> v(n);
  for (auto& a : v) a = cx(u(), u());
  return v;
}

double max_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("avx2 kernels match the scalar reference") {
  const KernelTable* avx2 = avx2_kernels();
  if (!avx2 || !cpu_supports_avx2()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  const KernelTable& ref = scalar_kernels();

  const cx u[4] = {cx(0.3, 0.4), cx(-0.1, 0.9), cx(0.7, -0.2), cx(0.5, 0.5)};

  for (std::uint32_t qubits = 1; qubits <= 11; ++qubits) {
    std::size_t n = std::size_t{1} << qubits;
    auto base = random_amps(n, 100 + qubits);

    for (std::uint32_t k = 0; k < qubits; ++k) {
      auto a = base, b = base;
      ref.apply_1q(a.data(), n, k, u);
      avx2->apply_1q(b.data(), n, k, u);
      CHECK(max_diff(a, b) < kTol);

      a = base;
      b = base;
      ref.apply_diag1(a.data(), n, k, cx(0.6, 0.8), cx(0.0, -1.0));
      avx2->apply_diag1(b.data(), n, k, cx(0.6, 0.8), cx(0.0, -1.0));
      CHECK(max_diff(a, b) < kTol);

      a = base;
      b = base;
      ref.apply_x(a.data(), n, k);
      avx2->apply_x(b.data(), n, k);
      CHECK(max_diff(a, b) == 0.0);

      CHECK(ref.prob_one(base.data(), n, k) ==
            doctest::Approx(avx2->prob_one(base.data(), n, k)).epsilon(1e-12));

      a = base;
      b = base;
      ref.project(a.data(), n, k, 1, 1.25);
      avx2->project(b.data(), n, k, 1, 1.25);
      CHECK(max_diff(a, b) == 0.0);
    }

    for (std::uint32_t c = 0; c < qubits; ++c)
      for (std::uint32_t t = 0; t < qubits; ++t) {
        if (c == t) continue;
        auto a = base, b = base;
        ref.apply_cnot(a.data(), n, c, t);
        avx2->apply_cnot(b.data(), n, c, t);
        CHECK(max_diff(a, b) == 0.0);

        a = base;
        b = base;
        ref.apply_cz(a.data(), n, c, t);
        avx2->apply_cz(b.data(), n, c, t);
        CHECK(max_diff(a, b) == 0.0);

        a = base;
        b = base;
        ref.apply_swap(a.data(), n, c, t);
        avx2->apply_swap(b.data(), n, c, t);
        CHECK(max_diff(a, b) == 0.0);
      }

    auto other = random_amps(n, 200 + qubits);
    CHECK(std::abs(ref.inner(base.data(), other.data(), n) -
                   avx2->inner(base.data(), other.data(), n)) < kTol);
    CHECK(ref.norm2(base.data(), n) ==
          doctest::Approx(avx2->norm2(base.data(), n)).epsilon(1e-12));

    auto a = base, b = base;
    ref.scale(a.data(), n, 0.717);
    avx2->scale(b.data(), n, 0.717);
    CHECK(max_diff(a, b) == 0.0);
  }
}

TEST_CASE("scalar reductions agree with a straightforward sum") {
  const KernelTable& ref = scalar_kernels();
  auto v = random_amps(64, 42);
  double n2 = 0;
  for (auto& a : v) n2 += std::norm(a);
  CHECK(ref.norm2(v.data(), v.size()) == doctest::Approx(n2).epsilon(1e-12));

  auto w = random_amps(64, 43);
  cx ip = 0;
  for (std::size_t i = 0; i < v.size(); ++i) ip += std::conj(v[i]) * w[i];
  CHECK(std::abs(ref.inner(v.data(), w.data(), v.size()) - ip) < 1e-12);
}

TEST_CASE("dispatch honors the DQCC_KERNELS override") {
  // active_kernels caches its choice; this only checks it returns a table
  // consistent with the environment at first call.
  const KernelTable& t = active_kernels();
  const char* env = std::getenv("DQCC_KERNELS");
  if (env && std::string(env) == "scalar") {
    CHECK(std::string(t.name) == "scalar");
  } else if (cpu_supports_avx2()) {
    CHECK(std::string(t.name) == "avx2");
  } else {
    CHECK(std::string(t.name) == "scalar");
  }
}
