#include <doctest.h>

#include "dqcc/generators.hpp"
#include "dqcc/schedule.hpp"
#include "oracles.hpp"

using namespace dqcc;

TEST_CASE("bucketize puts disjoint CNOTs in one bucket") {
  std::vector<Instruction> c = {make_gate(GateKind::CNOT, 0, 1),
                                make_gate(GateKind::CNOT, 2, 3)};
  auto b = bucketize(c, 4, 0);
  REQUIRE(b.buckets.size() == 1);
  CHECK(b.buckets[0].instructions.size() == 2);
}

TEST_CASE("bucketize serializes a shared-control chain pre-sweep") {
  std::vector<Instruction> c = {make_gate(GateKind::CNOT, 0, 1),
                                make_gate(GateKind::CNOT, 0, 2),
                                make_gate(GateKind::CNOT, 0, 3)};
  auto b = bucketize(c, 4, 0);
  REQUIRE(b.buckets.size() == 3);
  for (const auto& bucket : b.buckets)
    CHECK(bucket.instructions.size() == 1);
}

TEST_CASE("bucketize: single-qubit gates share a bucket when disjoint") {
  std::vector<Instruction> c = {make_gate(GateKind::H, 0),
                                make_gate(GateKind::CNOT, 0, 1),
                                make_gate(GateKind::H, 2)};
  auto b = bucketize(c, 3, 0);
  REQUIRE(b.buckets.size() == 2);
  CHECK(b.buckets[0].instructions.size() == 2);  // H(0), H(2)
  CHECK(b.buckets[0].instructions[0] == make_gate(GateKind::H, 0));
  CHECK(b.buckets[0].instructions[1] == make_gate(GateKind::H, 2));
  CHECK(b.buckets[1].instructions[0] == make_gate(GateKind::CNOT, 0, 1));
}

TEST_CASE("barrier closes all open buckets") {
  std::vector<Instruction> c = {make_gate(GateKind::H, 0), make_barrier(),
                                make_gate(GateKind::H, 1)};
  auto b = bucketize(c, 2, 0);
  REQUIRE(b.buckets.size() == 3);
  CHECK(b.buckets[1].instructions[0].kind == GateKind::Barrier);
}

TEST_CASE("flattened bucketize output preserves per-qubit order") {
  for (std::uint32_t i = 0; i < 25; ++i) {
    auto c = gen_random(5, 60, 700 + i, static_cast<RandomPattern>(i % 3));
    auto b = bucketize(c);
    auto flat = b.flatten();
    REQUIRE(flat.size() == c.instructions.size());
    for (std::uint32_t q = 0; q < c.qubit_count; ++q) {
      std::vector<Instruction> orig, flat_order;
      for (const auto& in : c.instructions)
        for (auto o : in.operands)
          if (o == q) orig.push_back(in);
      for (const auto& in : flat)
        for (auto o : in.operands)
          if (o == q) flat_order.push_back(in);
      CHECK(orig == flat_order);
    }
  }
}

TEST_CASE("bucket count equals the brute-force dependency depth") {
  for (std::uint32_t i = 0; i < 40; ++i) {
    auto c = gen_random(2 + i % 8, 1 + (i * 7) % 50, 40 + i,
                        static_cast<RandomPattern>(i % 3));
    CHECK(bucketize(c).buckets.size() ==
          testing::brute_force_depth(c.instructions));
  }
}

TEST_CASE("bucketize is idempotent on bucket count") {
  for (std::uint32_t i = 0; i < 15; ++i) {
    auto c = gen_random(4 + i % 4, 40, 900 + i, static_cast<RandomPattern>(i % 3));
    auto b1 = bucketize(c);
    auto b2 = bucketize(b1.flatten(), c.qubit_count, c.classical_bit_count);
    CHECK(b1.buckets.size() == b2.buckets.size());
  }
}

TEST_CASE("rebucketize schedules a group atomically") {
  std::vector<Instruction> instrs = {make_gate(GateKind::CNOT, 0, 1),
                                     make_gate(GateKind::CNOT, 0, 2)};
  SequenceGroup g{MergeGroup::Kind::shared_control, 0, {0, 1}};
  auto b = rebucketize(instrs, {&g, 1}, 3, 0);
  REQUIRE(b.buckets.size() == 1);
  CHECK(b.buckets[0].instructions.size() == 2);
  REQUIRE(b.buckets[0].groups.size() == 1);
  CHECK(b.buckets[0].groups[0].members == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("rebucketize: dependent gate lands after the group") {
  std::vector<Instruction> instrs = {make_gate(GateKind::CNOT, 0, 1),
                                     make_gate(GateKind::CNOT, 0, 2),
                                     make_gate(GateKind::H, 1)};
  SequenceGroup g{MergeGroup::Kind::shared_control, 0, {0, 1}};
  auto b = rebucketize(instrs, {&g, 1}, 3, 0);
  REQUIRE(b.buckets.size() == 2);
  CHECK(b.buckets[1].instructions[0] == make_gate(GateKind::H, 1));
}

TEST_CASE("rebucketize: unrelated CNOT joins the group's bucket") {
  std::vector<Instruction> instrs = {make_gate(GateKind::CNOT, 0, 1),
                                     make_gate(GateKind::CNOT, 0, 2),
                                     make_gate(GateKind::CNOT, 4, 5)};
  SequenceGroup g{MergeGroup::Kind::shared_control, 0, {0, 1}};
  auto b = rebucketize(instrs, {&g, 1}, 6, 0);
  REQUIRE(b.buckets.size() == 1);
  CHECK(b.buckets[0].instructions.size() == 3);
}

TEST_CASE("rebucketize rejects interleaved external dependencies") {
  // H(1) depends on the first member but precedes the second: the group
  // cannot be placed atomically without reordering qubit 1.
  std::vector<Instruction> instrs = {make_gate(GateKind::CNOT, 0, 1),
                                     make_gate(GateKind::H, 1),
                                     make_gate(GateKind::CNOT, 0, 2)};
  SequenceGroup g{MergeGroup::Kind::shared_control, 0, {0, 2}};
  CHECK_THROWS_AS(rebucketize(instrs, {&g, 1}, 3, 0), AtomicityViolation);
}

TEST_CASE("remove_empty") {
  BucketedCircuit b;
  b.qubit_count = 2;
  Bucket b0, b1, b2;
  b0.instructions.push_back(make_gate(GateKind::CNOT, 0, 1));
  b2.instructions.push_back(make_gate(GateKind::H, 0));
  b.buckets = {b0, b1, b2};
  auto out = remove_empty(b);
  REQUIRE(out.buckets.size() == 2);
  CHECK(out.buckets[0] == b0);
  CHECK(out.buckets[1] == b2);

  BucketedCircuit all_empty;
  all_empty.buckets = {Bucket{}, Bucket{}};
  CHECK(remove_empty(all_empty).buckets.empty());

  auto none = remove_empty(out);
  CHECK(none == out);
}
