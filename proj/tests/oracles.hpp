// Test-only oracles, kept independent of the implementation paths they
// check: brute-force longest path over the pairwise dependency relation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dqcc/ir.hpp"

namespace dqcc::testing {

inline bool touch_same_bit(const Instruction& a, const Instruction& b) {
  auto bits_of = [](const Instruction& in) {
    std::vector<std::uint32_t> bits;
    if (in.writes) bits.push_back(*in.writes);
    if (in.condition)
      bits.insert(bits.end(), in.condition->bits.begin(), in.condition->bits.end());
    return bits;
  };
  for (std::uint32_t x : bits_of(a))
    for (std::uint32_t y : bits_of(b))
      if (x == y) return true;
  return false;
}

inline bool depends(const Instruction& a, const Instruction& b) {
  if (a.kind == GateKind::Barrier || b.kind == GateKind::Barrier) return true;
  for (std::uint32_t q : a.operands)
    for (std::uint32_t p : b.operands)
      if (q == p) return true;
  return touch_same_bit(a, b);
}

/// Longest chain of the dependency DAG by memoized DFS over the pairwise
/// relation (earlier instruction -> later instruction when they depend).
inline std::uint32_t brute_force_depth(std::span<const Instruction> instrs) {
  std::size_t n = instrs.size();
  std::vector<std::uint32_t> longest(n, 0);
  std::uint32_t best = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t from = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (depends(instrs[i], instrs[j])) from = std::max(from, longest[i]);
    longest[j] = from + 1;
    best = std::max(best, longest[j]);
  }
  return best;
}

}  // namespace dqcc::testing
