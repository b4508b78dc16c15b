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

#include "dqcc/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace dqcc::sim {
namespace {

constexpr double kPruneTol = 1e-12;
constexpr double kFidelityTol = 1e-9;

std::uint8_t eval_parity(const Branch& b, const Condition& cond) {
  std::uint8_t acc = 0;
  for (std::uint32_t bit : cond.bits) {
    auto v = b.bit(bit);
    if (!v) throw SimError("condition reads unwritten bit " + std::to_string(bit));
    acc ^= *v;
  }
  return acc;
}

void record_bit(Branch& b, std::uint32_t bit, std::uint8_t value) {
  for (auto& [id, v] : b.outcome_record)
    if (id == bit) {
      v = value;
      return;
    }
  b.outcome_record.emplace_back(bit, value);
}

void reset_qubit(Statevector& sv, std::uint32_t q) {
  double p1 = sv.prob_one(q);
  if (p1 > 1.0 - kPruneTol) {
    sv.x(q);
    sv.project(q, 0, 1.0 / std::sqrt(p1));
  } else {
    sv.project(q, 0, 1.0 / std::sqrt(1.0 - p1));
  }
}

struct Runner {
  std::span<const Instruction> instrs;
  std::vector<std::int64_t> last_read;  // per classical bit; -1 = never
  std::vector<Branch> branches;
  std::uint64_t fork_count = 0;

  void build_liveness() {
    std::uint32_t max_bit = 0;
    for (const Instruction& in : instrs) {
      if (in.writes) max_bit = std::max(max_bit, *in.writes + 1);
      if (in.condition)
        for (std::uint32_t b : in.condition->bits)
          max_bit = std::max(max_bit, b + 1);
    }
    last_read.assign(max_bit, -1);
    for (std::size_t p = 0; p < instrs.size(); ++p)
      if (instrs[p].condition)
        for (std::uint32_t b : instrs[p].condition->bits)
          last_read[b] = static_cast<std::int64_t>(p);
  }

  // Drops record entries no later instruction reads. Returns true when any
  // entry died (a merge opportunity).
  bool drop_dead(std::size_t p) {
    bool any = false;
    for (Branch& b : branches) {
      auto& rec = b.outcome_record;
      auto it = std::remove_if(rec.begin(), rec.end(), [&](const auto& e) {
        return last_read[e.first] <= static_cast<std::int64_t>(p);
      });
      any |= it != rec.end();
      rec.erase(it, rec.end());
    }
    return any;
  }

  void coalesce() {
    std::vector<Branch> merged;
    for (Branch& b : branches) {
      bool absorbed = false;
      for (Branch& m : merged) {
        if (m.outcome_record != b.outcome_record) continue;
        cx ip = m.state.inner(b.state);
        double f = ip.real() * ip.real() + ip.imag() * ip.imag();
        if (f >= 1.0 - 1e-12) {
          m.probability += b.probability;
          m.path_count += b.path_count;
          absorbed = true;
          break;
        }
      }
      if (!absorbed) merged.push_back(std::move(b));
    }
    branches = std::move(merged);
  }

  void measure(std::size_t p, const Instruction& in, bool x_basis) {
    std::uint32_t q = in.operands[0];
    std::vector<Branch> next;
    next.reserve(branches.size() * 2);
    for (Branch& b : branches) {
      if (in.condition && eval_parity(b, *in.condition) != in.condition->parity) {
        next.push_back(std::move(b));
        continue;
      }
      if (x_basis) b.state.h(q);
      double p1 = b.state.prob_one(q);
      double p0 = 1.0 - p1;
      bool take0 = p0 > kPruneTol;
      bool take1 = p1 > kPruneTol;
      if (take0 && take1) ++fork_count;
      if (take0) {
        Branch c = take1 ? b : std::move(b);
        c.state.project(q, 0, 1.0 / std::sqrt(p0));
        if (x_basis) c.state.h(q);
        c.probability *= take1 ? p0 : 1.0;
        record_bit(c, *in.writes, 0);
        next.push_back(std::move(c));
      }
      if (take1) {
        Branch c = std::move(b);
        c.state.project(q, 1, 1.0 / std::sqrt(p1));
        if (x_basis) c.state.h(q);
        c.probability *= take0 ? p1 : 1.0;
        record_bit(c, *in.writes, 1);
        next.push_back(std::move(c));
      }
    }
    branches = std::move(next);
    bool dropped = drop_dead(p);
    (void)dropped;
    coalesce();
  }

  void run() {
    build_liveness();
    for (std::size_t p = 0; p < instrs.size(); ++p) {
      const Instruction& in = instrs[p];
      switch (in.kind) {
        case GateKind::MeasureZ:
          measure(p, in, false);
          continue;
        case GateKind::MeasureX:
          measure(p, in, true);
          continue;
        default:
          break;
      }
      bool merge_point = false;
      for (Branch& b : branches) {
        if (in.condition && eval_parity(b, *in.condition) != in.condition->parity)
          continue;
        switch (in.kind) {
          case GateKind::Reset:
            reset_qubit(b.state, in.operands[0]);
            merge_point = true;
            break;
          case GateKind::EPR: {
            std::uint32_t qa = in.operands[0], qb = in.operands[1];
            if (b.state.prob_one(qa) > kPruneTol ||
                b.state.prob_one(qb) > kPruneTol)
              throw SimError("EPR generation on a non-reset communication qubit");
            b.state.h(qa);
            b.state.cnot(qa, qb);
            break;
          }
          case GateKind::Barrier:
            break;
          default:
            b.state.apply_unitary(in.kind, in.theta, in.operands);
            break;
        }
      }
      if (drop_dead(p) || merge_point) coalesce();
    }
  }
};

}  // namespace

std::uint64_t SimResult::path_total() const {
  std::uint64_t total = 0;
  for (const Branch& b : branches) total += b.path_count;
  return total;
}

std::optional<std::uint8_t> Branch::bit(std::uint32_t id) const {
  for (const auto& [b, v] : outcome_record)
    if (b == id) return v;
  return std::nullopt;
}

SimResult simulate(std::span<const Instruction> instrs,
                   std::uint32_t qubit_count, const Statevector& input) {
  if (input.qubit_count() != qubit_count)
    throw SimError("simulate: input state size mismatch");
  Runner r;
  r.instrs = instrs;
  r.branches.push_back(Branch{{}, input, 1.0, 1});
  r.run();
  return {std::move(r.branches), r.fork_count};
}

Statevector run_unitary(const LogicalCircuit& c, const Statevector& input) {
  Statevector sv = input;
  for (const Instruction& in : c.instructions) {
    if (is_measurement(in.kind) || in.kind == GateKind::Barrier) continue;
    sv.apply_unitary(in.kind, in.theta, in.operands);
  }
  return sv;
}

namespace {

std::vector<cx> random_state(std::size_t dim, std::mt19937_64& rng) {
  auto uniform = [&] { return ((rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<cx> v(dim);
  double norm = 0.0;
  for (auto& a : v) {
    double r = std::sqrt(-2.0 * std::log(uniform()));
    double phi = 2.0 * M_PI * uniform();
    a = cx(r * std::cos(phi), r * std::sin(phi));
    norm += std::norm(a);
  }
  double s = 1.0 / std::sqrt(norm);
  for (auto& a : v) a *= s;
  return v;
}

std::string basis_label(std::size_t idx, std::uint32_t n) {
  std::string s;
  for (std::uint32_t q = 0; q < n; ++q) s += ((idx >> q) & 1) ? '1' : '0';
  return "basis |" + s + "> (qubit 0 first)";
}

}  // namespace

EquivalenceReport check_equivalence(const LogicalCircuit& logical,
                                    const PhysicalCircuit& physical,
                                    std::uint32_t random_states,
                                    std::uint64_t seed) {
  if (logical.qubit_count > 10)
    throw SimError("check_equivalence limited to 10 logical qubits");

  // Compact the simulation to the qubits the physical circuit touches.
  std::set<std::uint32_t> used;
  for (std::uint32_t l = 0; l < logical.qubit_count; ++l)
    used.insert(physical.placement.qubit_of(l).flat(physical.topology));
  for (const Instruction& in : physical.instructions)
    for (std::uint32_t q : in.operands) used.insert(q);
  std::map<std::uint32_t, std::uint32_t> sim_pos;
  for (std::uint32_t q : used)
    sim_pos.emplace(q, static_cast<std::uint32_t>(sim_pos.size()));
  std::uint32_t sim_n = static_cast<std::uint32_t>(sim_pos.size());
  if (sim_n > Statevector::kMaxQubits)
    throw SimError("physical circuit touches " + std::to_string(sim_n) +
                   " qubits; simulation limit is 16");

  std::vector<Instruction> compact;
  compact.reserve(physical.instructions.size());
  for (const Instruction& in : physical.instructions) {
    if (is_measurement(in.kind) && in.writes &&
        *in.writes < physical.logical_bit_count)
      continue;  // final logical measurements: equivalence is pre-measurement
    Instruction copy = in;
    for (std::uint32_t& q : copy.operands) q = sim_pos.at(q);
    compact.push_back(std::move(copy));
  }

  std::vector<std::uint32_t> data_pos(logical.qubit_count);
  for (std::uint32_t l = 0; l < logical.qubit_count; ++l)
    data_pos[l] =
        sim_pos.at(physical.placement.qubit_of(l).flat(physical.topology));

  auto spread = [&](std::size_t idx) {
    std::size_t out = 0;
    for (std::uint32_t l = 0; l < logical.qubit_count; ++l)
      if ((idx >> l) & 1) out |= std::size_t{1} << data_pos[l];
    return out;
  };

  std::uint32_t L = logical.qubit_count;
  std::size_t dimL = std::size_t{1} << L;
  std::mt19937_64 rng(seed);

  EquivalenceReport report;
  std::size_t input_count = dimL + random_states;
  for (std::size_t k = 0; k < input_count; ++k) {
    Statevector ref_in(L);
    std::string label;
    if (k < dimL) {
      ref_in.set_basis_state(k);
      label = basis_label(k, L);
    } else {
      auto amps = random_state(dimL, rng);
      std::copy(amps.begin(), amps.end(), ref_in.amplitudes().begin());
      label = "random state #" + std::to_string(k - dimL);
    }
    Statevector ref = run_unitary(logical, ref_in);

    Statevector phys_in(sim_n);
    auto pa = phys_in.amplitudes();
    std::fill(pa.begin(), pa.end(), cx{0.0, 0.0});
    for (std::size_t idx = 0; idx < dimL; ++idx)
      pa[spread(idx)] = ref_in.amplitudes()[idx];

    SimResult run = simulate(compact, sim_n, phys_in);
    report.branch_count = std::max(report.branch_count, run.path_total());

    for (const Branch& br : run.branches) {
      std::vector<cx> sub(dimL);
      double kept = 0.0;
      for (std::size_t idx = 0; idx < dimL; ++idx) {
        sub[idx] = br.state.amplitudes()[spread(idx)];
        kept += std::norm(sub[idx]);
      }
      double leak = 1.0 - kept;
      if (leak > kFidelityTol) {
        report.equivalent = false;
        report.worst_fidelity = std::min(report.worst_fidelity, kept);
        report.failing_input = label;
        report.diagnostic =
            "ancilla not disentangled: |0..0> weight deficit " +
            std::to_string(leak) + " on the non-data qubits";
        return report;
      }
      cx ip = active_kernels().inner(ref.amplitudes().data(), sub.data(), dimL);
      double fid = ip.real() * ip.real() + ip.imag() * ip.imag();
      report.worst_fidelity = std::min(report.worst_fidelity, fid);
      if (fid < 1.0 - kFidelityTol) {
        report.equivalent = false;
        report.failing_input = label;
        report.diagnostic = "branch fidelity " + std::to_string(fid) +
                            " below threshold";
        return report;
      }
    }
  }
  return report;
}

}  // namespace dqcc::sim
