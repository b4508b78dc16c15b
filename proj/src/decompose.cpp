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

#include "dqcc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dqcc {
namespace {

Instruction conditioned(Instruction in, std::vector<std::uint32_t> bits,
                        std::uint8_t parity = 1) {
  in.condition = Condition{std::move(bits), parity};
  return in;
}

}  // namespace

std::vector<MergeGroup> group_bucket(const Bucket& b) {
  // Post-sweep invariant: any qubit shared between two instructions must be
  // the common control or common target of CNOTs of one group.
  std::map<std::uint32_t, std::vector<std::size_t>> users;
  for (std::size_t i = 0; i < b.instructions.size(); ++i)
    for (std::uint32_t q : b.instructions[i].operands) users[q].push_back(i);

  struct Entry {
    std::uint32_t control, target, pos;
  };
  std::vector<Entry> cnots;
  for (std::size_t i = 0; i < b.instructions.size(); ++i) {
    const Instruction& in = b.instructions[i];
    if (in.is_cnot())
      cnots.push_back({in.control(), in.target(), static_cast<std::uint32_t>(i)});
  }

  for (const auto& [q, us] : users) {
    if (us.size() < 2) continue;
    bool all_control = true, all_target = true;
    for (std::size_t i : us) {
      const Instruction& in = b.instructions[i];
      if (!in.is_cnot()) {
        all_control = all_target = false;
        break;
      }
      all_control &= in.control() == q;
      all_target &= in.target() == q;
    }
    if (!all_control && !all_target)
      throw MalformedBucket("bucket shares qubit " + std::to_string(q) +
                            " across incompatible roles");
  }

  std::vector<MergeGroup> out;
  std::vector<Entry> rest;

  std::sort(cnots.begin(), cnots.end(), [](const Entry& a, const Entry& b_) {
    return std::tie(a.control, a.target, a.pos) <
           std::tie(b_.control, b_.target, b_.pos);
  });
  for (std::size_t i = 0; i < cnots.size();) {
    std::size_t j = i;
    while (j < cnots.size() && cnots[j].control == cnots[i].control) ++j;
    if (j - i >= 2) {
      MergeGroup g;
      g.kind = MergeGroup::Kind::shared_control;
      g.shared_qubit = cnots[i].control;
      for (std::size_t k = i; k < j; ++k) g.members.push_back(cnots[k].pos);
      out.push_back(std::move(g));
    } else {
      rest.push_back(cnots[i]);
    }
    i = j;
  }

  std::sort(rest.begin(), rest.end(), [](const Entry& a, const Entry& b_) {
    return std::tie(a.target, a.control, a.pos) <
           std::tie(b_.target, b_.control, b_.pos);
  });
  for (std::size_t i = 0; i < rest.size();) {
    std::size_t j = i;
    while (j < rest.size() && rest[j].target == rest[i].target) ++j;
    MergeGroup g;
    if (j - i >= 2) {
      g.kind = MergeGroup::Kind::shared_target;
      g.shared_qubit = rest[i].target;
    } else {
      g.kind = MergeGroup::Kind::independent;
    }
    for (std::size_t k = i; k < j; ++k) g.members.push_back(rest[k].pos);
    std::sort(g.members.begin(), g.members.end());
    out.push_back(std::move(g));
    i = j;
  }
  return out;
}

std::vector<Instruction> decompose_naive_cnot(const QubitRef& c,
                                              const QubitRef& t,
                                              const NodeTopology& topo,
                                              ClassicalAlloc& bits) {
  if (c.node == t.node)
    throw LocalGateError("operands are co-located on node " +
                         std::to_string(c.node));
  std::uint32_t ea = QubitRef::comm(c.node).flat(topo);
  std::uint32_t eb = QubitRef::comm(t.node).flat(topo);
  std::uint32_t cq = c.flat(topo), tq = t.flat(topo);
  std::uint32_t m1 = bits.fresh();
  std::uint32_t m2 = bits.fresh();

  std::vector<Instruction> out;
  out.push_back(make_gate(GateKind::EPR, ea, eb));
  out.push_back(make_gate(GateKind::CNOT, cq, ea));
  out.push_back(make_measure(GateKind::MeasureZ, ea, m1));
  out.push_back(conditioned(make_gate(GateKind::X, eb), {m1}));
  out.push_back(make_gate(GateKind::Reset, ea));
  out.push_back(make_gate(GateKind::CNOT, eb, tq));
  out.push_back(make_measure(GateKind::MeasureX, eb, m2));
  out.push_back(conditioned(make_gate(GateKind::Z, cq), {m2}));
  out.push_back(make_gate(GateKind::Reset, eb));
  return out;
}

std::vector<Instruction> build_ghz(std::span<const std::uint32_t> nodes,
                                   const QubitRef& root_buffer,
                                   const NodeTopology& topo,
                                   ClassicalAlloc& bits) {
  if (nodes.size() < 2)
    throw std::invalid_argument("build_ghz requires at least two nodes");
  std::set<std::uint32_t> uniq(nodes.begin(), nodes.end());
  if (uniq.size() != nodes.size())
    throw NodeCollisionError("build_ghz: duplicate node");
  if (root_buffer.node != nodes.front() || root_buffer.role != QubitRole::memory)
    throw ResourceError("root buffer must be a memory qubit on the root node");

  std::uint32_t e0 = QubitRef::comm(nodes[0]).flat(topo);
  std::uint32_t buf = root_buffer.flat(topo);

  std::vector<Instruction> out;
  out.push_back(
      make_gate(GateKind::EPR, e0, QubitRef::comm(nodes[1]).flat(topo)));
  if (nodes.size() == 2) return out;

  out.push_back(make_gate(GateKind::SWAP, e0, buf));
  for (std::size_t i = 2; i < nodes.size(); ++i) {
    std::uint32_t ei = QubitRef::comm(nodes[i]).flat(topo);
    std::uint32_t m = bits.fresh();
    out.push_back(make_gate(GateKind::EPR, e0, ei));
    out.push_back(make_gate(GateKind::CNOT, buf, e0));
    out.push_back(make_measure(GateKind::MeasureZ, e0, m));
    out.push_back(conditioned(make_gate(GateKind::X, ei), {m}));
    out.push_back(make_gate(GateKind::Reset, e0));
  }
  out.push_back(make_gate(GateKind::SWAP, e0, buf));
  return out;
}

namespace {

// Shared cat-state frame of both parallel constructions: distribute the
// Z-value of `data` onto the electrons of all peer nodes, run `middle`,
// then erase the copies with X-measurements and a parity-conditioned Z.
std::vector<Instruction> cat_frame(const QubitRef& data,
                                   std::span<const std::uint32_t> peer_nodes,
                                   const QubitRef& root_buffer,
                                   const NodeTopology& topo,
                                   ClassicalAlloc& bits,
                                   const std::vector<Instruction>& middle) {
  std::vector<std::uint32_t> all_nodes;
  all_nodes.push_back(data.node);
  all_nodes.insert(all_nodes.end(), peer_nodes.begin(), peer_nodes.end());

  std::vector<Instruction> out =
      build_ghz(all_nodes, root_buffer, topo, bits);

  std::uint32_t e_root = QubitRef::comm(data.node).flat(topo);
  std::uint32_t dq = data.flat(topo);
  std::uint32_t m = bits.fresh();
  out.push_back(make_gate(GateKind::CNOT, dq, e_root));
  out.push_back(make_measure(GateKind::MeasureZ, e_root, m));
  for (std::uint32_t node : peer_nodes)
    out.push_back(
        conditioned(make_gate(GateKind::X, QubitRef::comm(node).flat(topo)), {m}));
  out.push_back(make_gate(GateKind::Reset, e_root));

  out.insert(out.end(), middle.begin(), middle.end());

  std::vector<std::uint32_t> parity_bits;
  for (std::uint32_t node : peer_nodes) {
    std::uint32_t mi = bits.fresh();
    out.push_back(make_measure(GateKind::MeasureX,
                               QubitRef::comm(node).flat(topo), mi));
    parity_bits.push_back(mi);
  }
  out.push_back(conditioned(make_gate(GateKind::Z, dq), parity_bits));
  for (std::uint32_t node : peer_nodes)
    out.push_back(make_gate(GateKind::Reset, QubitRef::comm(node).flat(topo)));
  return out;
}

void require_distinct_remote(const QubitRef& shared,
                             std::span<const QubitRef> others) {
  std::set<std::uint32_t> nodes;
  for (const QubitRef& q : others) {
    if (q.node == shared.node)
      throw NodeCollisionError("group member co-located with the shared qubit");
    if (!nodes.insert(q.node).second)
      throw NodeCollisionError("two group members on node " +
                               std::to_string(q.node));
  }
}

}  // namespace

std::vector<Instruction> decompose_shared_control(
    const QubitRef& c, std::span<const QubitRef> targets,
    const QubitRef& root_buffer, const NodeTopology& topo,
    ClassicalAlloc& bits) {
  if (targets.size() < 2)
    throw std::invalid_argument("shared-control group needs n >= 2");
  require_distinct_remote(c, targets);

  std::vector<std::uint32_t> peers;
  for (const QubitRef& t : targets) peers.push_back(t.node);
  std::vector<Instruction> middle;
  for (const QubitRef& t : targets)
    middle.push_back(make_gate(GateKind::CNOT,
                               QubitRef::comm(t.node).flat(topo), t.flat(topo)));
  return cat_frame(c, peers, root_buffer, topo, bits, middle);
}

std::vector<Instruction> decompose_shared_target(
    const QubitRef& t, std::span<const QubitRef> controls,
    const QubitRef& root_buffer, const NodeTopology& topo,
    ClassicalAlloc& bits) {
  if (controls.size() < 2)
    throw std::invalid_argument("shared-target group needs n >= 2");
  require_distinct_remote(t, controls);

  std::vector<std::uint32_t> peers;
  for (const QubitRef& cc : controls) peers.push_back(cc.node);
  std::vector<Instruction> middle;
  for (const QubitRef& cc : controls)
    middle.push_back(make_gate(GateKind::CZ, cc.flat(topo),
                               QubitRef::comm(cc.node).flat(topo)));

  std::uint32_t tq = t.flat(topo);
  std::vector<Instruction> out;
  out.push_back(make_gate(GateKind::H, tq));
  auto frame = cat_frame(t, peers, root_buffer, topo, bits, middle);
  out.insert(out.end(), frame.begin(), frame.end());
  out.push_back(make_gate(GateKind::H, tq));
  return out;
}

namespace {

struct Emitter {
  const Placement& placement;
  const NodeTopology& topo;
  Mode mode;
  const CostModel& cost;
  PhysicalCircuit& phys;
  ClassicalAlloc bits;

  std::uint32_t flat(std::uint32_t logical) const {
    return placement.qubit_of(logical).flat(topo);
  }

  void passthrough(const Instruction& in) {
    Instruction copy = in;
    for (std::uint32_t& q : copy.operands) q = flat(q);
    phys.instructions.push_back(std::move(copy));
  }

  void emit_block(std::vector<Instruction> block, BlockInfo::Kind kind,
                  std::uint32_t group_size, std::uint32_t bucket) {
    BlockInfo info;
    info.kind = kind;
    info.group_size = group_size;
    info.bucket = bucket;
    info.first = phys.instructions.size();
    info.count = block.size();
    phys.blocks.push_back(info);
    phys.instructions.insert(phys.instructions.end(),
                             std::make_move_iterator(block.begin()),
                             std::make_move_iterator(block.end()));
  }

  void emit_local_cnot(const Instruction& in, std::uint32_t bucket) {
    BlockInfo info;
    info.kind = BlockInfo::Kind::local_cnot;
    info.bucket = bucket;
    info.first = phys.instructions.size();
    info.count = 1;
    phys.blocks.push_back(info);
    passthrough(in);
  }

  void emit_naive(const Instruction& in, std::uint32_t bucket) {
    const QubitRef& c = placement.qubit_of(in.control());
    const QubitRef& t = placement.qubit_of(in.target());
    emit_block(decompose_naive_cnot(c, t, topo, bits), BlockInfo::Kind::naive_cnot,
               1, bucket);
  }

  std::uint32_t min_parallel_size() const {
    return mode == Mode::relaxed ? 2 : cost.min_group_size_conservative;
  }

  // Emits one shared group, splitting off co-located members and node
  // collisions; returns true when at least one parallel block was emitted
  // covering all remaining members (used for cost annotation).
  bool emit_shared_group(const Bucket& b, const MergeGroup& g,
                         std::uint32_t bucket) {
    bool shared_control = g.kind == MergeGroup::Kind::shared_control;
    const Instruction& first = b.instructions[g.members.front()];
    std::uint32_t shared_logical =
        shared_control ? first.control() : first.target();
    QubitRef shared = placement.qubit_of(shared_logical);

    // Local members bypass the distributed machinery.
    std::vector<std::uint32_t> remote;  // member indices
    for (std::uint32_t m : g.members) {
      const Instruction& in = b.instructions[m];
      std::uint32_t other = shared_control ? in.target() : in.control();
      if (placement.node_of(other) == shared.node)
        emit_local_cnot(in, bucket);
      else
        remote.push_back(m);
    }

    // Distinct-node waves: members colliding on a node spill to later waves.
    bool all_parallel = !remote.empty();
    std::vector<std::uint32_t> pendings = remote;
    while (!pendings.empty()) {
      std::vector<std::uint32_t> wave, spill;
      std::set<std::uint32_t> used;
      for (std::uint32_t m : pendings) {
        const Instruction& in = b.instructions[m];
        std::uint32_t other = shared_control ? in.target() : in.control();
        if (used.insert(placement.node_of(other)).second)
          wave.push_back(m);
        else
          spill.push_back(m);
      }
      auto buffer_slot = placement.free_memory_slot(shared.node, topo);
      if (mode != Mode::naive && wave.size() >= min_parallel_size() &&
          buffer_slot) {
        std::vector<QubitRef> others;
        for (std::uint32_t m : wave) {
          const Instruction& in = b.instructions[m];
          others.push_back(
              placement.qubit_of(shared_control ? in.target() : in.control()));
        }
        QubitRef buf = QubitRef::mem(shared.node, *buffer_slot);
        std::vector<Instruction> block =
            shared_control
                ? decompose_shared_control(shared, others, buf, topo, bits)
                : decompose_shared_target(shared, others, buf, topo, bits);
        emit_block(std::move(block),
                   shared_control ? BlockInfo::Kind::parallel_shared_control
                                  : BlockInfo::Kind::parallel_shared_target,
                   static_cast<std::uint32_t>(wave.size()), bucket);
      } else {
        for (std::uint32_t m : wave) emit_naive(b.instructions[m], bucket);
        all_parallel = false;
      }
      pendings = std::move(spill);
      if (!pendings.empty()) all_parallel = false;
    }
    return all_parallel && remote.size() == g.members.size();
  }
};

}  // namespace

CompileResult compile(const BucketedCircuit& bucketed,
                      const Placement& placement, const NodeTopology& topo,
                      Mode mode, const CostModel& cost,
                      const std::string& name) {
  if (placement.size() < bucketed.qubit_count)
    throw InternalError("compile: placement does not cover all logical qubits");
  if (!placement.injective())
    throw InternalError("compile: placement is not injective");
  for (const QubitRef& q : placement.slots)
    if (!q.valid_in(topo))
      throw InternalError("compile: placement target " + q.str() +
                          " outside topology");

  CompileResult result;
  result.plan = bucketed;
  PhysicalCircuit& phys = result.circuit;
  phys.name = name;
  phys.topology = topo;
  phys.placement = placement;
  phys.logical_bit_count = bucketed.classical_bit_count;

  Emitter em{placement, topo, mode, cost, phys, {bucketed.classical_bit_count}};
  result.annotations.resize(bucketed.buckets.size());

  for (std::size_t bi = 0; bi < bucketed.buckets.size(); ++bi) {
    const Bucket& b = bucketed.buckets[bi];
    BucketAnnotation& ann = result.annotations[bi];
    ann.tags.assign(b.instructions.size(), CnotTag::none);

    std::vector<MergeGroup> derived = group_bucket(b);
    std::vector<MergeGroup> plan_groups;

    // Non-CNOT instructions pass through in source order first; blocks for
    // the bucket's CNOTs follow in deterministic (sorted) group order.
    for (const Instruction& in : b.instructions)
      if (!in.is_cnot()) em.passthrough(in);

    for (const MergeGroup& g : derived) {
      if (g.kind == MergeGroup::Kind::independent || g.size() < 2) {
        for (std::uint32_t m : g.members) {
          const Instruction& in = b.instructions[m];
          bool local =
              placement.node_of(in.control()) == placement.node_of(in.target());
          if (local)
            em.emit_local_cnot(in, static_cast<std::uint32_t>(bi));
          else
            em.emit_naive(in, static_cast<std::uint32_t>(bi));
          ann.tags[m] = local ? CnotTag::local : CnotTag::naive;
        }
        continue;
      }
      bool parallel = em.emit_shared_group(b, g, static_cast<std::uint32_t>(bi));
      plan_groups.push_back(g);
      ann.parallel.push_back(parallel);
      for (std::uint32_t m : g.members) {
        if (parallel) {
          ann.tags[m] = CnotTag::grouped;
        } else {
          const Instruction& in = b.instructions[m];
          bool local =
              placement.node_of(in.control()) == placement.node_of(in.target());
          ann.tags[m] = local ? CnotTag::local : CnotTag::naive;
        }
      }
    }
    result.plan.buckets[bi].groups = std::move(plan_groups);
  }

  phys.classical_bit_count = em.bits.next;
  return result;
}

}  // namespace dqcc
