#include <doctest.h>

#include <cmath>
#include <map>

#include "dqcc/decompose.hpp"
#include "dqcc/generators.hpp"
#include "dqcc/pipeline.hpp"
#include "dqcc/sim/simulator.hpp"

using namespace dqcc;
using namespace dqcc::sim;

namespace {

Statevector zero_state(std::uint32_t n) { return Statevector(n); }

}  // namespace

TEST_CASE("H then measure forks into two half-probability branches") {
  std::vector<Instruction> c = {make_gate(GateKind::H, 0),
                                make_measure(GateKind::MeasureZ, 0, 0)};
  auto run = simulate(c, 1, zero_state(1));
  REQUIRE(run.branches.size() == 2);
  CHECK(run.branches[0].probability == doctest::Approx(0.5));
  CHECK(run.branches[1].probability == doctest::Approx(0.5));
  CHECK(run.branches[0].bit(0) == 0);  // outcome 0 enumerated first
  CHECK(run.branches[1].bit(0) == 1);
  CHECK(run.path_total() == 2);
}

TEST_CASE("EPR generation prepares the Bell pair") {
  std::vector<Instruction> c = {make_gate(GateKind::EPR, 0, 1)};
  auto run = simulate(c, 2, zero_state(2));
  REQUIRE(run.branches.size() == 1);
  auto amps = run.branches[0].state.amplitudes();
  double inv = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(amps[0] - cx(inv, 0)) < 1e-12);
  CHECK(std::abs(amps[3] - cx(inv, 0)) < 1e-12);
  CHECK(std::abs(amps[1]) < 1e-12);
  CHECK(std::abs(amps[2]) < 1e-12);
}

TEST_CASE("EPR on a dirty communication qubit is a protocol violation") {
  std::vector<Instruction> c = {make_gate(GateKind::X, 0),
                                make_gate(GateKind::EPR, 0, 1)};
  CHECK_THROWS_AS(simulate(c, 2, zero_state(2)), SimError);
}

TEST_CASE("parity conditions use the XOR of the referenced bits") {
  // Both bits measure to 1: parity 0, so a ?parity=1 X must not fire.
  std::vector<Instruction> c;
  c.push_back(make_gate(GateKind::X, 0));
  c.push_back(make_gate(GateKind::X, 1));
  c.push_back(make_measure(GateKind::MeasureZ, 0, 0));
  c.push_back(make_measure(GateKind::MeasureZ, 1, 1));
  Instruction x = make_gate(GateKind::X, 2);
  x.condition = Condition{{0, 1}, 1};
  c.push_back(x);
  auto run = simulate(c, 3, zero_state(3));
  REQUIRE(run.branches.size() == 1);
  // Qubit 2 stays |0>: amplitude lives at index 011.
  CHECK(std::abs(run.branches[0].state.amplitudes()[3] - cx(1, 0)) < 1e-12);

  // One bit set: parity 1, the X fires.
  std::vector<Instruction> c2;
  c2.push_back(make_gate(GateKind::X, 0));
  c2.push_back(make_measure(GateKind::MeasureZ, 0, 0));
  c2.push_back(make_measure(GateKind::MeasureZ, 1, 1));
  Instruction x2 = make_gate(GateKind::X, 2);
  x2.condition = Condition{{0, 1}, 1};
  c2.push_back(x2);
  auto run2 = simulate(c2, 3, zero_state(3));
  REQUIRE(run2.branches.size() == 1);
  CHECK(std::abs(run2.branches[0].state.amplitudes()[0b101] - cx(1, 0)) < 1e-12);
}

TEST_CASE("norm is preserved across every prefix of a protocol run") {
  ClassicalAlloc bits;
  NodeTopology topo{2, 4, true};
  auto block = decompose_naive_cnot(QubitRef::mem(0, 0), QubitRef::mem(1, 0),
                                    topo, bits);
  std::vector<Instruction> compact;
  std::map<std::uint32_t, std::uint32_t> pos;
  for (const auto& in : block)
    for (auto q : in.operands) pos.emplace(q, 0);
  std::uint32_t next = 0;
  for (auto& [q, p] : pos) p = next++;
  for (auto in : block) {
    for (auto& q : in.operands) q = pos.at(q);
    compact.push_back(in);
  }
  Statevector init(static_cast<std::uint32_t>(pos.size()));
  // Control in |+> so both measurement outcomes occur.
  init.h(pos.at(QubitRef::mem(0, 0).flat(topo)));
  for (std::size_t k = 1; k <= compact.size(); ++k) {
    auto run = simulate(std::span(compact).first(k),
                        static_cast<std::uint32_t>(pos.size()), init);
    double total = 0.0;
    for (const auto& b : run.branches) {
      CHECK(b.state.norm2() == doctest::Approx(1.0).epsilon(1e-9));
      total += b.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("naive-compiled CNOT is equivalent with 4 enumerated branches") {
  ClassicalAlloc bits;
  NodeTopology topo{2, 4, true};
  auto block = decompose_naive_cnot(QubitRef::mem(0, 0), QubitRef::mem(1, 0),
                                    topo, bits);
  LogicalCircuit logical;
  logical.name = "cnot";
  logical.qubit_count = 2;
  logical.instructions.push_back(make_gate(GateKind::CNOT, 0, 1));

  PhysicalCircuit phys;
  phys.topology = topo;
  phys.placement = Placement::one_per_node(2);
  phys.instructions = block;
  phys.classical_bit_count = bits.next;
  phys.logical_bit_count = 0;

  auto rep = check_equivalence(logical, phys, 5, 99);
  CHECK(rep.equivalent);
  CHECK(rep.worst_fidelity >= 1.0 - 1e-9);
  CHECK(rep.branch_count == 4);  // two binary protocol measurements
}

TEST_CASE("state_fidelity basics") {
  Statevector a(2), b(2);
  CHECK(state_fidelity(a.amplitudes(), b.amplitudes()) == doctest::Approx(1.0));
  b.set_basis_state(2);
  CHECK(state_fidelity(a.amplitudes(), b.amplitudes()) == doctest::Approx(0.0));
  // Global phase is invisible.
  Statevector c = a;
  c.amplitudes()[0] *= cx(std::cos(0.7), std::sin(0.7));
  CHECK(state_fidelity(a.amplitudes(), c.amplitudes()) == doctest::Approx(1.0));

  Statevector d(3);
  CHECK_THROWS(state_fidelity(a.amplitudes(), d.amplitudes()));
  Statevector e(2);
  e.amplitudes()[0] = 0.5;  // not normalized
  CHECK_THROWS(state_fidelity(a.amplitudes(), e.amplitudes()));
}

TEST_CASE("deferred measurement: feed-forward equals coherent corrections") {
  // The naive protocol's conditioned X is CNOT(e_A, e_B) under deferred
  // measurement; check the data qubits agree on |10> for every branch.
  NodeTopology topo{2, 1, true};
  std::uint32_t c = QubitRef::mem(0, 0).flat(topo);
  std::uint32_t t = QubitRef::mem(1, 0).flat(topo);
  std::uint32_t ea = QubitRef::comm(0).flat(topo);
  std::uint32_t eb = QubitRef::comm(1).flat(topo);

  std::vector<Instruction> coherent = {
      make_gate(GateKind::EPR, ea, eb),  make_gate(GateKind::CNOT, c, ea),
      make_gate(GateKind::CNOT, ea, eb),  // deferred X correction
      make_gate(GateKind::CNOT, eb, t),
      make_gate(GateKind::H, eb),
      make_gate(GateKind::CZ, eb, c),  // deferred Z correction
  };
  std::uint32_t n = topo.total_qubits();
  Statevector in(n);
  in.x(c);
  ClassicalAlloc bits;
  std::vector<Instruction> tail = coherent;
  tail.push_back(make_measure(GateKind::MeasureZ, ea, bits.fresh()));
  tail.push_back(make_measure(GateKind::MeasureZ, eb, bits.fresh()));
  auto run = simulate(tail, n, in);
  CHECK(run.path_total() == 4);
  for (const auto& br : run.branches) {
    double agree = 0.0;
    auto amps = br.state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
      if (((i >> c) & 1) == 1 && ((i >> t) & 1) == 1) agree += std::norm(amps[i]);
    CHECK(agree == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("check_equivalence flags a dropped correction") {
  LogicalCircuit logical = gen_bv(3, "111");
  RunConfig cfg;
  cfg.mode = Mode::conservative;
  auto r = run_pipeline(logical, cfg);
  PhysicalCircuit broken = r.optimized.circuit;
  bool removed = false;
  for (std::size_t i = 0; i < broken.instructions.size(); ++i) {
    if (broken.instructions[i].condition) {
      broken.instructions.erase(broken.instructions.begin() + i);
      removed = true;
      break;
    }
  }
  REQUIRE(removed);
  auto rep = check_equivalence(logical, broken, 4, 11);
  CHECK(!rep.equivalent);
  CHECK(!rep.failing_input.empty());
}

TEST_CASE("identity circuit vs empty physical circuit") {
  LogicalCircuit logical;
  logical.qubit_count = 2;
  PhysicalCircuit phys;
  phys.topology = {2, 4, true};
  phys.placement = Placement::one_per_node(2);
  auto rep = check_equivalence(logical, phys, 3, 1);
  CHECK(rep.equivalent);
  CHECK(rep.branch_count == 1);
}

TEST_CASE("statevector rejects oversized registers") {
  CHECK_THROWS_AS(Statevector(17), std::runtime_error);
}
