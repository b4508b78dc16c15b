#include <doctest.h>

#include <cmath>

#include "dqcc/generators.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/sim/simulator.hpp"
#include "dqcc/validate.hpp"

using namespace dqcc;

TEST_CASE("parse a minimal program") {
  auto c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n");
  CHECK(c.qubit_count == 2);
  REQUIRE(c.instructions.size() == 1);
  CHECK(c.instructions[0] == make_gate(GateKind::CNOT, 0, 1));
}

TEST_CASE("barrier statements become full fences") {
  auto c = parse_qasm(
      "OPENQASM 2.0;\nqreg q[1];\nh q[0];\nbarrier q;\nh q[0];\n");
  REQUIRE(c.instructions.size() == 3);
  CHECK(c.instructions[1].kind == GateKind::Barrier);
}

TEST_CASE("unsupported gates are named in the error") {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n");
    FAIL("expected UnsupportedGateError");
  } catch (const UnsupportedGateError& e) {
    CHECK(e.gate == "ccx");
    CHECK(e.line == 3);
  }
}

TEST_CASE("syntax errors carry the position") {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line >= 3);
  }
}

TEST_CASE("register overflow is rejected") {
  CHECK_THROWS_WITH_AS(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[5];\n"),
                       doctest::Contains("register-overflow"), ParseError);
}

TEST_CASE("multiple registers flatten in declaration order") {
  auto c = parse_qasm(
      "OPENQASM 2.0;\nqreg a[2];\nqreg b[2];\ncx a[1],b[0];\n");
  CHECK(c.qubit_count == 4);
  CHECK(c.instructions[0] == make_gate(GateKind::CNOT, 1, 2));
}

TEST_CASE("swap expands to three cx") {
  auto c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nswap q[0],q[1];\n");
  REQUIRE(c.instructions.size() == 3);
  CHECK(c.instructions[0] == make_gate(GateKind::CNOT, 0, 1));
  CHECK(c.instructions[1] == make_gate(GateKind::CNOT, 1, 0));
  CHECK(c.instructions[2] == make_gate(GateKind::CNOT, 0, 1));
}

TEST_CASE("angle expressions evaluate") {
  auto c = parse_qasm(
      "OPENQASM 2.0;\nqreg q[1];\nrz(pi/2) q[0];\nrx(-pi/4) q[0];\n"
      "ry(0.5*(1+1)) q[0];\n");
  CHECK(c.instructions[0].theta == doctest::Approx(M_PI / 2));
  CHECK(c.instructions[1].theta == doctest::Approx(-M_PI / 4));
  CHECK(c.instructions[2].theta == doctest::Approx(1.0));
}

TEST_CASE("register broadcast") {
  auto c = parse_qasm(
      "OPENQASM 2.0;\nqreg q[3];\ncreg c[3];\nh q;\nmeasure q -> c;\n");
  REQUIRE(c.instructions.size() == 6);
  CHECK(c.instructions[3].kind == GateKind::MeasureZ);
  CHECK(c.instructions[5].writes == 2);
}

TEST_CASE("parse_qasm after emit_qasm is the identity on the subset") {
  for (std::uint32_t i = 0; i < 12; ++i) {
    auto pattern = static_cast<RandomPattern>(i % 3);
    auto c = gen_random(3 + i % 5, 40, 500 + i, pattern);
    auto back = parse_qasm(emit_qasm(c), c.name);
    CHECK(back.qubit_count == c.qubit_count);
    REQUIRE(back.instructions.size() == c.instructions.size());
    CHECK(back.instructions == c.instructions);
  }
  auto bv = gen_bv(4, "1010");
  auto back = parse_qasm(emit_qasm(bv));
  CHECK(back.instructions == bv.instructions);
  CHECK(back.classical_bit_count == bv.classical_bit_count);
}

TEST_CASE("gen_bv structure") {
  auto c = gen_bv(3, "101");
  bool has03 = false, has23 = false, has13 = false;
  for (const auto& in : c.instructions) {
    if (!in.is_cnot()) continue;
    has03 |= in.control() == 0 && in.target() == 3;
    has13 |= in.control() == 1;
    has23 |= in.control() == 2 && in.target() == 3;
  }
  CHECK(has03);
  CHECK(has23);
  CHECK(!has13);

  CHECK(gen_bv(2, "00").instructions.size() == 2 + 2 + 2 + 2);  // no CNOTs
  CHECK_THROWS_AS(gen_bv(3, "10"), std::invalid_argument);
}

TEST_CASE("BV measures its secret with probability one (n <= 6, all secrets)") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      std::string secret;
      for (std::uint32_t i = 0; i < n; ++i)
        secret += ((s >> i) & 1) ? '1' : '0';
      auto c = gen_bv(n, secret);
      sim::Statevector in(c.qubit_count);
      auto out = sim::run_unitary(c, in);
      // Data qubits must read the secret exactly: the amplitude mass sits
      // on indices whose low n bits equal s.
      double mass = 0.0;
      auto amps = out.amplitudes();
      for (std::size_t idx = 0; idx < amps.size(); ++idx)
        if ((idx & ((1u << n) - 1)) == s) mass += std::norm(amps[idx]);
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("DJ constant oracles measure all-zero with probability one") {
  for (DjOracle oracle : {DjOracle::constant0, DjOracle::constant1}) {
    auto c = gen_dj(3, oracle);
    sim::Statevector in(c.qubit_count);
    auto out = sim::run_unitary(c, in);
    double mass = 0.0;
    auto amps = out.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx)
      if ((idx & 0b111) == 0) mass += std::norm(amps[idx]);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("DJ balanced oracle layout") {
  auto c = gen_dj(2, DjOracle::balanced, "11");
  std::uint32_t cnots = 0;
  for (const auto& in : c.instructions)
    if (in.is_cnot()) {
      ++cnots;
      CHECK(in.target() == 2);
    }
  CHECK(cnots == 2);
  CHECK_THROWS_AS(gen_dj(2, DjOracle::balanced, "00"), std::invalid_argument);
  CHECK_THROWS_AS(gen_dj(2, DjOracle::balanced, "1"), std::invalid_argument);
}

TEST_CASE("gen_random is deterministic and respects gate_count") {
  auto a = gen_random(6, 100, 7, RandomPattern::fanout_heavy);
  auto b = gen_random(6, 100, 7, RandomPattern::fanout_heavy);
  CHECK(a.instructions == b.instructions);
  CHECK(a.instructions.size() == 100);
  CHECK(gen_random(2, 1, 3, RandomPattern::uniform).instructions.size() == 1);
}

TEST_CASE("fanout_heavy produces shared-control runs for most seeds") {
  std::uint32_t hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = gen_random(6, 100, seed, RandomPattern::fanout_heavy);
    std::uint32_t run = 1;
    bool found = false;
    for (std::size_t i = 1; i < c.instructions.size(); ++i) {
      const auto& prev = c.instructions[i - 1];
      const auto& cur = c.instructions[i];
      if (prev.is_cnot() && cur.is_cnot() && prev.control() == cur.control()) {
        if (++run >= 3) found = true;
      } else {
        run = 1;
      }
    }
    hits += found;
  }
  CHECK(hits >= 18);  // >= 90% of seeds
}

TEST_CASE("fanin_heavy produces shared-target runs") {
  auto c = gen_random(6, 100, 7, RandomPattern::fanin_heavy);
  std::uint32_t run = 1;
  bool found = false;
  for (std::size_t i = 1; i < c.instructions.size(); ++i) {
    const auto& prev = c.instructions[i - 1];
    const auto& cur = c.instructions[i];
    if (prev.is_cnot() && cur.is_cnot() && prev.target() == cur.target()) {
      if (++run >= 3) found = true;
    } else {
      run = 1;
    }
  }
  CHECK(found);
}
