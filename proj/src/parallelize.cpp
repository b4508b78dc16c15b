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

#include "dqcc/parallelize.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dqcc {

bool commutes_with_control(GateKind k) {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
      return true;
    default:
      return false;
  }
}

bool commutes_with_target(GateKind k) {
  return k == GateKind::X || k == GateKind::RX;
}

namespace {

// How one qubit is occupied inside a destination bucket.
struct QubitUsage {
  std::vector<int> as_control;  // positions of CNOTs using it as control
  std::vector<int> as_target;
  bool other = false;  // any non-CNOT touch, or CNOT via a different gate kind
};

using UsageMap = std::map<std::uint32_t, QubitUsage>;

UsageMap scan_usage(std::span<const Instruction> instrs) {
  UsageMap usage;
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    const Instruction& in = instrs[i];
    if (in.is_cnot()) {
      usage[in.control()].as_control.push_back(static_cast<int>(i));
      usage[in.target()].as_target.push_back(static_cast<int>(i));
    } else {
      for (std::uint32_t q : in.operands) usage[q].other = true;
    }
  }
  return usage;
}

bool contains_barrier(std::span<const Instruction> instrs) {
  return std::any_of(instrs.begin(), instrs.end(), [](const Instruction& in) {
    return in.kind == GateKind::Barrier;
  });
}

// ---------------------------------------------------------------------------
// Sweep engine. Works on instruction ids into a fixed pool so that moves and
// rollbacks are cheap; groups reference ids.
// ---------------------------------------------------------------------------

struct EngineGroup {
  MergeGroup::Kind kind = MergeGroup::Kind::independent;
  std::uint32_t key = 0;
  std::vector<int> members;  // pool ids; empty = dead group
};

class SweepEngine {
 public:
  SweepEngine(const BucketedCircuit& in, Mode mode)
      : mode_(mode),
        qubit_count_(in.qubit_count),
        bit_count_(in.classical_bit_count) {
    for (const Bucket& b : in.buckets) {
      std::vector<int> ids;
      int base = static_cast<int>(pool_.size());
      for (const Instruction& instr : b.instructions) {
        ids.push_back(static_cast<int>(pool_.size()));
        pool_.push_back(instr);
      }
      for (const MergeGroup& mg : b.groups) {
        EngineGroup g;
        g.kind = mg.kind;
        g.key = mg.shared_qubit;
        for (std::uint32_t m : mg.members) g.members.push_back(base + static_cast<int>(m));
        groups_.push_back(g);
      }
      buckets_.push_back(std::move(ids));
    }
    group_of_.assign(pool_.size(), -1);
    for (std::size_t g = 0; g < groups_.size(); ++g)
      for (int id : groups_[g].members) group_of_[id] = static_cast<int>(g);
  }

  void forward() { sweep(/*forward=*/true); }
  void backward() { sweep(/*forward=*/false); }

  void demote_small_groups(std::uint32_t min_size) {
    for (EngineGroup& g : groups_) {
      if (g.members.empty() || g.members.size() >= min_size) continue;
      for (int id : g.members) group_of_[id] = -1;
      g.members.clear();
    }
  }

  std::vector<Instruction> sequence() const {
    std::vector<Instruction> out;
    out.reserve(pool_.size());
    for (const auto& b : buckets_)
      for (int id : b) out.push_back(pool_[id]);
    return out;
  }

  std::vector<SequenceGroup> sequence_groups() const {
    std::vector<std::size_t> pos(pool_.size(), 0);
    std::size_t p = 0;
    for (const auto& b : buckets_)
      for (int id : b) pos[id] = p++;
    std::vector<SequenceGroup> out;
    for (const EngineGroup& g : groups_) {
      if (g.members.empty()) continue;
      SequenceGroup sg;
      sg.kind = g.kind;
      sg.shared_qubit = g.key;
      for (int id : g.members) sg.members.push_back(pos[id]);
      std::sort(sg.members.begin(), sg.members.end());
      out.push_back(std::move(sg));
    }
    return out;
  }

  BucketedCircuit rebucketized() const {
    auto seq = sequence();
    auto gs = sequence_groups();
    return rebucketize(seq, gs, qubit_count_, bit_count_);
  }

 private:
  // A move unit: one ungrouped CNOT or one whole group within a bucket.
  struct Unit {
    std::vector<int> ids;
    int group = -1;  // engine group id, or -1 for a lone CNOT
  };

  struct JoinPlan {
    std::size_t dest_bucket = 0;
    JoinResult::Kind kind = JoinResult::Kind::blocked;
    std::uint32_t key = 0;
    int dest_group = -1;        // existing group to extend, or -1
    std::vector<int> partners;  // ungrouped dest CNOTs absorbed into the group
  };

  Mode mode_;
  std::uint32_t qubit_count_;
  std::uint32_t bit_count_;
  std::vector<Instruction> pool_;
  std::vector<std::vector<int>> buckets_;
  std::vector<EngineGroup> groups_;
  std::vector<int> group_of_;

  std::vector<std::uint32_t> unit_support(const Unit& u) const {
    std::vector<std::uint32_t> s;
    for (int id : u.ids)
      for (std::uint32_t q : pool_[id].operands) s.push_back(q);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  // True when every touch of the unit's support inside bucket `bi` comes
  // from a single-qubit gate the moving CNOTs commute past (relaxed only).
  bool passable(const Unit& u, std::size_t bi) const {
    if (mode_ != Mode::relaxed) return false;
    for (int id : buckets_[bi]) {
      const Instruction& x = pool_[id];
      if (x.kind == GateKind::Barrier) return false;
      bool touches = false;
      for (int mid : u.ids) {
        const Instruction& m = pool_[mid];
        for (std::uint32_t q : x.operands) {
          if (q == m.control()) {
            if (!is_single_qubit_gate(x.kind) || !commutes_with_control(x.kind))
              return false;
            touches = true;
          } else if (q == m.target()) {
            if (!is_single_qubit_gate(x.kind) || !commutes_with_target(x.kind))
              return false;
            touches = true;
          }
        }
      }
      (void)touches;
    }
    return true;
  }

  bool bucket_touches(const Unit& u, std::size_t bi) const {
    if (contains_barrier_bucket(bi)) return true;
    auto support = unit_support(u);
    for (int id : buckets_[bi])
      for (std::uint32_t q : pool_[id].operands)
        if (std::binary_search(support.begin(), support.end(), q)) return true;
    return false;
  }

  bool contains_barrier_bucket(std::size_t bi) const {
    for (int id : buckets_[bi])
      if (pool_[id].kind == GateKind::Barrier) return true;
    return false;
  }

  // Evaluates a join of `u` into bucket `bi`, which is known to touch the
  // unit's support. Returns a blocked plan when impossible.
  JoinPlan evaluate_shared_join(const Unit& u, std::size_t bi) const {
    JoinPlan plan;
    plan.dest_bucket = bi;
    if (contains_barrier_bucket(bi)) return plan;

    std::vector<Instruction> dest;
    dest.reserve(buckets_[bi].size());
    for (int id : buckets_[bi]) dest.push_back(pool_[id]);
    UsageMap usage = scan_usage(dest);

    // Role of the unit's shared qubit and the set of per-member free qubits.
    MergeGroup::Kind want;
    std::uint32_t key;
    std::vector<std::uint32_t> member_free;
    if (u.group >= 0) {
      const EngineGroup& g = groups_[u.group];
      want = g.kind;
      key = g.key;
      for (int id : u.ids)
        member_free.push_back(want == MergeGroup::Kind::shared_control
                                  ? pool_[id].target()
                                  : pool_[id].control());
    } else {
      const Instruction& g = pool_[u.ids[0]];
      // A lone CNOT may join on either role; pick whichever matches dest.
      auto uc = usage.find(g.control());
      auto ut = usage.find(g.target());
      bool c_used = uc != usage.end();
      bool t_used = ut != usage.end();
      if (c_used && !t_used && !uc->second.other && uc->second.as_target.empty()) {
        want = MergeGroup::Kind::shared_control;
        key = g.control();
        member_free.push_back(g.target());
      } else if (t_used && !c_used && !ut->second.other &&
                 ut->second.as_control.empty()) {
        want = MergeGroup::Kind::shared_target;
        key = g.target();
        member_free.push_back(g.control());
      } else {
        return plan;  // role clash or both operands occupied
      }
    }

    auto ku = usage.find(key);
    if (ku == usage.end()) return plan;  // group unit: key unused => no share
    const QubitUsage& kusage = ku->second;
    if (kusage.other) return plan;
    const auto& same_role = want == MergeGroup::Kind::shared_control
                                ? kusage.as_control
                                : kusage.as_target;
    const auto& clash_role = want == MergeGroup::Kind::shared_control
                                 ? kusage.as_target
                                 : kusage.as_control;
    if (same_role.empty() || !clash_role.empty()) return plan;
    for (std::uint32_t q : member_free)
      if (usage.count(q)) return plan;  // a member's free operand is occupied

    // Partner CNOTs must be ungrouped or already in one group of the same
    // kind on the same qubit.
    int dest_group = -1;
    std::vector<int> partners;
    for (int pos : same_role) {
      int id = buckets_[bi][pos];
      int pg = group_of_[id];
      if (pg < 0) {
        partners.push_back(id);
        continue;
      }
      const EngineGroup& eg = groups_[pg];
      if (eg.kind != want || eg.key != key) return plan;
      if (dest_group >= 0 && dest_group != pg) return plan;
      dest_group = pg;
    }

    plan.kind = want == MergeGroup::Kind::shared_control
                    ? JoinResult::Kind::shared_control
                    : JoinResult::Kind::shared_target;
    plan.key = key;
    plan.dest_group = dest_group;
    plan.partners = std::move(partners);
    return plan;
  }

  // Nearest-first destination search. Shared joins are preferred: the scan
  // stops at the first bucket touching the unit's qubits, which either
  // accepts the unit into a group or blocks it; a nearer disjoint bucket
  // serves as fallback destination. Empty buckets are skipped.
  std::optional<JoinPlan> find_destination(const Unit& u, std::size_t src,
                                           bool forward) const {
    std::optional<JoinPlan> fallback;
    std::size_t n = buckets_.size();
    for (std::size_t step = 1;; ++step) {
      std::size_t j;
      if (forward) {
        if (step > src) break;
        j = src - step;
      } else {
        j = src + step;
        if (j >= n) break;
      }
      if (buckets_[j].empty()) continue;
      if (!bucket_touches(u, j)) {
        if (!fallback) {
          JoinPlan p;
          p.dest_bucket = j;
          p.kind = JoinResult::Kind::independent;
          fallback = p;
        }
        continue;
      }
      if (passable(u, j)) continue;
      JoinPlan p = evaluate_shared_join(u, j);
      if (p.kind != JoinResult::Kind::blocked) return p;
      break;  // first blocking bucket ends the search
    }
    return fallback;
  }

  std::vector<Unit> units_of(std::size_t bi) const {
    std::vector<Unit> units;
    std::set<int> grouped_seen;
    for (int id : buckets_[bi]) {
      if (!pool_[id].is_cnot()) continue;
      int g = group_of_[id];
      if (g < 0) {
        units.push_back({{id}, -1});
      } else if (!grouped_seen.count(g)) {
        grouped_seen.insert(g);
        Unit u;
        u.group = g;
        u.ids = groups_[g].members;
        units.push_back(std::move(u));
      }
    }
    return units;
  }

  void apply_plan(const Unit& u, const JoinPlan& plan, std::size_t src) {
    auto& sb = buckets_[src];
    sb.erase(std::remove_if(sb.begin(), sb.end(),
                            [&](int id) {
                              return std::find(u.ids.begin(), u.ids.end(), id) !=
                                     u.ids.end();
                            }),
             sb.end());
    auto& db = buckets_[plan.dest_bucket];
    db.insert(db.end(), u.ids.begin(), u.ids.end());

    if (plan.kind == JoinResult::Kind::independent) return;

    int gid;
    if (plan.dest_group >= 0) {
      gid = plan.dest_group;
    } else if (u.group >= 0) {
      gid = u.group;
    } else {
      EngineGroup g;
      g.kind = plan.kind == JoinResult::Kind::shared_control
                   ? MergeGroup::Kind::shared_control
                   : MergeGroup::Kind::shared_target;
      g.key = plan.key;
      groups_.push_back(g);
      gid = static_cast<int>(groups_.size()) - 1;
    }
    EngineGroup& g = groups_[gid];
    auto absorb = [&](int id) {
      if (group_of_[id] == gid) return;
      g.members.push_back(id);
      group_of_[id] = gid;
    };
    for (int id : plan.partners) absorb(id);
    if (u.group >= 0 && u.group != gid) {
      for (int id : groups_[u.group].members) absorb(id);
      groups_[u.group].members.clear();
    } else {
      for (int id : u.ids) absorb(id);
    }
    std::sort(g.members.begin(), g.members.end());
  }

  void sweep(bool forward) {
    std::size_t n = buckets_.size();
    if (n < 2) return;
    std::size_t cur_depth = mode_ == Mode::conservative
                                ? rebucketized().buckets.size()
                                : 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = forward ? k : n - 1 - k;
      if (forward && i == 0) continue;
      if (!forward && i == n - 1) continue;
      auto units = units_of(i);
      if (units.empty()) continue;

      // Bucket atomicity: every CNOT unit of the bucket must find a
      // destination, or nothing moves.
      std::vector<JoinPlan> plans;
      bool all_found = true;
      for (const Unit& u : units) {
        auto p = find_destination(u, i, forward);
        if (!p) {
          all_found = false;
          break;
        }
        plans.push_back(*p);
      }
      if (!all_found) continue;

      auto snap_buckets = buckets_;
      auto snap_groups = groups_;
      auto snap_group_of = group_of_;

      // Re-validate each plan against the mutating state; a conflict over a
      // partner claimed by two units aborts the whole bucket move.
      bool ok = true;
      for (std::size_t ui = 0; ui < units.size(); ++ui) {
        const Unit& u = units[ui];
        JoinPlan p = plans[ui];
        if (p.kind != JoinResult::Kind::independent) {
          p = evaluate_shared_join(u, p.dest_bucket);
          if (p.kind == JoinResult::Kind::blocked) {
            ok = false;
            break;
          }
        }
        apply_plan(u, p, i);
      }
      if (ok && mode_ == Mode::conservative) {
        std::size_t d = rebucketized().buckets.size();
        if (d > cur_depth)
          ok = false;
        else
          cur_depth = d;
      }
      if (!ok) {
        buckets_ = std::move(snap_buckets);
        groups_ = std::move(snap_groups);
        group_of_ = std::move(snap_group_of);
      }
    }
  }
};

}  // namespace

JoinResult can_join(const Instruction& g, const Bucket& dest) {
  if (!g.is_cnot())
    throw InternalError("can_join: candidate must be a CNOT");
  if (contains_barrier(dest.instructions))
    return {JoinResult::Kind::blocked, "destination contains a barrier"};

  UsageMap usage = scan_usage(dest.instructions);
  auto uc = usage.find(g.control());
  auto ut = usage.find(g.target());
  bool c_used = uc != usage.end();
  bool t_used = ut != usage.end();
  if (!c_used && !t_used) return {JoinResult::Kind::independent, {}};

  auto group_kind_of = [&](int pos) -> std::optional<MergeGroup::Kind> {
    for (const MergeGroup& mg : dest.groups)
      for (std::uint32_t m : mg.members)
        if (static_cast<int>(m) == pos) return mg.kind;
    return std::nullopt;
  };

  if (c_used && !t_used && !uc->second.other && uc->second.as_target.empty()) {
    for (int pos : uc->second.as_control) {
      auto k = group_kind_of(pos);
      if (k && *k != MergeGroup::Kind::shared_control)
        return {JoinResult::Kind::blocked,
                "control qubit held by a group of a different kind"};
    }
    return {JoinResult::Kind::shared_control, {}};
  }
  if (t_used && !c_used && !ut->second.other && ut->second.as_control.empty()) {
    for (int pos : ut->second.as_target) {
      auto k = group_kind_of(pos);
      if (k && *k != MergeGroup::Kind::shared_target)
        return {JoinResult::Kind::blocked,
                "target qubit held by a group of a different kind"};
    }
    return {JoinResult::Kind::shared_target, {}};
  }
  return {JoinResult::Kind::blocked, "operand appears under a clashing role"};
}

std::pair<std::vector<Instruction>, std::vector<SequenceGroup>> forward_sweep(
    const BucketedCircuit& bucketed, Mode mode) {
  SweepEngine e(bucketed, mode);
  e.forward();
  return {e.sequence(), e.sequence_groups()};
}

std::pair<std::vector<Instruction>, std::vector<SequenceGroup>> backward_sweep(
    const BucketedCircuit& bucketed, Mode mode) {
  SweepEngine e(bucketed, mode);
  e.backward();
  return {e.sequence(), e.sequence_groups()};
}

BucketedCircuit optimize(const BucketedCircuit& bucketed, Mode mode,
                         const CostModel& cost) {
  if (mode == Mode::naive) return bucketed;
  SweepEngine e(bucketed, mode);
  e.forward();
  e.backward();
  std::uint32_t min_size =
      mode == Mode::relaxed ? 2 : cost.min_group_size_conservative;
  e.demote_small_groups(min_size);
  BucketedCircuit out = remove_empty(e.rebucketized());
  if (mode == Mode::conservative && out.buckets.size() > bucketed.buckets.size())
    return bucketed;
  return out;
}

}  // namespace dqcc
