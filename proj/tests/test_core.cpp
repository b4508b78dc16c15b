#include <doctest.h>

#include <random>

#include "dqcc/depth.hpp"
#include "dqcc/generators.hpp"
#include "dqcc/schedule.hpp"
#include "dqcc/validate.hpp"
#include "oracles.hpp"

using namespace dqcc;

TEST_CASE("qubits_of returns exactly the operand qubits") {
  auto cnot = make_gate(GateKind::CNOT, 0, 1);
  auto q = qubits_of(cnot);
  CHECK(std::vector<std::uint32_t>(q.begin(), q.end()) ==
        std::vector<std::uint32_t>{0, 1});

  auto h = make_gate(GateKind::H, 3);
  CHECK(qubits_of(h).size() == 1);
  CHECK(qubits_of(h)[0] == 3);

  auto epr = make_gate(GateKind::EPR, 10, 20);
  CHECK(qubits_of(epr).size() == 2);

  auto meas = make_measure(GateKind::MeasureZ, 5, 0);
  CHECK(qubits_of(meas).size() == 1);
  CHECK(qubits_of(meas)[0] == 5);
}

TEST_CASE("depth_layers basics") {
  CHECK(depth_layers({}, 4, 0) == 0);

  std::vector<Instruction> par = {make_gate(GateKind::H, 0),
                                  make_gate(GateKind::H, 1),
                                  make_gate(GateKind::H, 2)};
  CHECK(depth_layers(par, 3, 0) == 1);

  std::vector<Instruction> chain = {make_gate(GateKind::CNOT, 0, 1),
                                    make_gate(GateKind::CNOT, 0, 2),
                                    make_gate(GateKind::CNOT, 0, 3)};
  CHECK(depth_layers(chain, 4, 0) == 3);
}

TEST_CASE("barriers fence everything") {
  std::vector<Instruction> c = {make_gate(GateKind::H, 0), make_barrier(),
                                make_gate(GateKind::H, 1)};
  CHECK(depth_layers(c, 2, 0) == 3);
  CHECK(testing::brute_force_depth(c) == 3);
}

TEST_CASE("classical dependencies order instructions") {
  std::vector<Instruction> c;
  c.push_back(make_measure(GateKind::MeasureZ, 0, 0));
  Instruction x = make_gate(GateKind::X, 1);
  x.condition = Condition{{0}, 1};
  c.push_back(x);
  CHECK(depth_layers(c, 2, 1) == 2);
  CHECK(testing::brute_force_depth(c) == 2);
}

TEST_CASE("depth equals brute-force longest path on random circuits") {
  for (std::uint32_t i = 0; i < 60; ++i) {
    auto pattern = static_cast<RandomPattern>(i % 3);
    auto c = gen_random(2 + i % 7, 1 + (i * 13) % 50, 1000 + i, pattern);
    CHECK(depth_layers(c) == testing::brute_force_depth(c.instructions));
  }
}

TEST_CASE("depth is invariant under permutation within a layer") {
  std::mt19937_64 rng(7);
  for (std::uint32_t i = 0; i < 20; ++i) {
    auto c = gen_random(4 + i % 5, 30, 55 + i, RandomPattern::uniform);
    auto buckets = bucketize(c);
    std::uint32_t d = depth_layers(c);
    CHECK(d == buckets.buckets.size());
    // Shuffle instructions inside each bucket and re-measure.
    std::vector<Instruction> shuffled;
    for (auto& b : buckets.buckets) {
      auto instrs = b.instructions;
      std::shuffle(instrs.begin(), instrs.end(), rng);
      shuffled.insert(shuffled.end(), instrs.begin(), instrs.end());
    }
    CHECK(depth_layers(shuffled, c.qubit_count, c.classical_bit_count) == d);
  }
}

namespace {

BucketedCircuit naive_chain(std::uint32_t k) {
  // k sequential distributed CNOTs sharing qubit 0.
  std::vector<Instruction> instrs;
  for (std::uint32_t i = 0; i < k; ++i)
    instrs.push_back(make_gate(GateKind::CNOT, 0, 1 + i));
  return bucketize(instrs, k + 1, 0);
}

}  // namespace

TEST_CASE("weighted depth: three sequential naive distributed CNOTs cost 57") {
  CostModel cost;
  auto b = naive_chain(3);
  REQUIRE(b.buckets.size() == 3);
  auto ann = annotate_naive(b, Placement::one_per_node(4));
  CHECK(weighted_depth(b, cost, ann) == 57);
}

TEST_CASE("weighted depth: parallel group of three costs 43") {
  CostModel cost;
  BucketedCircuit b;
  b.qubit_count = 4;
  Bucket bucket;
  for (std::uint32_t i = 0; i < 3; ++i)
    bucket.instructions.push_back(make_gate(GateKind::CNOT, 0, 1 + i));
  MergeGroup g;
  g.kind = MergeGroup::Kind::shared_control;
  g.shared_qubit = 0;
  g.members = {0, 1, 2};
  bucket.groups.push_back(g);
  b.buckets.push_back(bucket);

  Annotations ann(1);
  ann[0].tags = {CnotTag::grouped, CnotTag::grouped, CnotTag::grouped};
  ann[0].parallel = {true};
  CHECK(weighted_depth(b, cost, ann) == 43);
  CHECK(cost.parallel_group_cost(2) == 42);
  CHECK(cost.parallel_group_cost(6) == 46);
}

TEST_CASE("weighted depth: concurrent items contribute max, not sum") {
  CostModel cost;
  std::vector<Instruction> instrs = {make_gate(GateKind::CNOT, 0, 1),
                                     make_gate(GateKind::CNOT, 2, 3)};
  auto b = bucketize(instrs, 4, 0);
  REQUIRE(b.buckets.size() == 1);
  auto ann = annotate_naive(b, Placement::one_per_node(4));
  CHECK(weighted_depth(b, cost, ann) == 19);
}

TEST_CASE("weighted depth with unit costs and no groups equals bucket count") {
  CostModel unit;
  unit.naive_cnot_cost = 1;
  unit.parallel_base_cost = 1;
  unit.epr_cost = 1;
  for (std::uint32_t i = 0; i < 10; ++i) {
    auto c = gen_random(4, 25, 90 + i, RandomPattern::fanout_heavy);
    auto b = bucketize(c);
    auto ann = annotate_naive(b, Placement::one_per_node(c.qubit_count));
    CHECK(weighted_depth(b, unit, ann) == b.buckets.size());
  }
}

TEST_CASE("weighted depth rejects an unannotated CNOT") {
  CostModel cost;
  auto b = naive_chain(1);
  Annotations ann(1);
  ann[0].tags = {CnotTag::none};
  CHECK_THROWS_AS(weighted_depth(b, cost, ann), InternalError);
}

TEST_CASE("validate flags out-of-range operands and acausal conditions") {
  LogicalCircuit c;
  c.qubit_count = 2;
  c.classical_bit_count = 1;
  c.instructions.push_back(make_gate(GateKind::CNOT, 0, 5));
  auto v = validate(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message.find("out of range") != std::string::npos);

  LogicalCircuit c2;
  c2.qubit_count = 2;
  c2.classical_bit_count = 1;
  Instruction x = make_gate(GateKind::X, 0);
  x.condition = Condition{{0}, 1};
  c2.instructions.push_back(x);
  bool acausal = false;
  for (const auto& via : validate(c2))
    acausal |= via.message.find("acausal") != std::string::npos;
  CHECK(acausal);
  bool cond_in_logical = false;
  for (const auto& via : validate(c2))
    cond_in_logical |= via.message.find("condition") != std::string::npos;
  CHECK(cond_in_logical);
}

TEST_CASE("generated circuits validate cleanly") {
  CHECK(validate(gen_bv(3, "101")).empty());
  CHECK(validate(gen_dj(4, DjOracle::balanced, "1111")).empty());
  CHECK(validate(gen_random(6, 100, 7, RandomPattern::fanout_heavy)).empty());
}

TEST_CASE("cost model rejects zero fields") {
  CostModel cost;
  cost.naive_cnot_cost = 0;
  CHECK_THROWS_AS(cost.check(), std::invalid_argument);
}

TEST_CASE("qubit flat ids round-trip through the topology") {
  NodeTopology topo{3, 4, true};
  for (std::uint32_t n = 0; n < 3; ++n) {
    CHECK(QubitRef::from_flat(topo, QubitRef::comm(n).flat(topo)) ==
          QubitRef::comm(n));
    for (std::uint32_t m = 0; m < 4; ++m)
      CHECK(QubitRef::from_flat(topo, QubitRef::mem(n, m).flat(topo)) ==
            QubitRef::mem(n, m));
  }
  CHECK(QubitRef::comm(1).str() == "n1.e0");
  CHECK(QubitRef::mem(0, 2).str() == "n0.m2");
}
