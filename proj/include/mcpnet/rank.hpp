#pragma once

#include <cstdint>

#include "mcpnet/state.hpp"

namespace mcpnet {

// Position of a state along the phi cycle, carrying its width.
struct RankCode {
  int width = 1;
  std::uint32_t value = 0;

  // Throws std::out_of_range unless value < 2^width.
  static RankCode make(int width, std::uint64_t value);

  friend bool operator==(const RankCode&, const RankCode&) = default;
};

// value = sum_j c_j 2^(j-1) with c_j = |x_j - x_{j+1}| for j < n and c_n = x_n.
RankCode rank(const State& x);

// Inverse of rank: x_n = c_n, then x_j = |c_j - x_{j+1}| downwards.
State unrank(const RankCode& k);

// unrank(rank(x) + 1 mod 2^n); coincides with phi.
State phi_via_rank(const State& x);

}  // namespace mcpnet
