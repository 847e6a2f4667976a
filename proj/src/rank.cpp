#include "mcpnet/rank.hpp"

#include <stdexcept>
#include <string>

namespace mcpnet {

RankCode RankCode::make(int width, std::uint64_t value) {
  check_width(width);
  if (value > State::full_mask(width)) {
    throw std::out_of_range("rank " + std::to_string(value) + " out of range for width " +
                            std::to_string(width));
  }
  return RankCode{width, static_cast<std::uint32_t>(value)};
}

RankCode rank(const State& x) {
  const int n = x.width();
  std::uint32_t value = 0;
  for (int j = 1; j <= n; ++j) {
    const int c = j < n ? (x.bit(j) ^ x.bit(j + 1)) : x.bit(n);
    value |= static_cast<std::uint32_t>(c) << (j - 1);
  }
  return RankCode{n, value};
}

State unrank(const RankCode& k) {
  const int n = k.width;
  State x = State::zeros(n);
  int next = static_cast<int>((k.value >> (n - 1)) & 1u);
  x = x.with_bit(n, next);
  for (int j = n - 1; j >= 1; --j) {
    const int c = static_cast<int>((k.value >> (j - 1)) & 1u);
    next = c ^ next;
    x = x.with_bit(j, next);
  }
  return x;
}

State phi_via_rank(const State& x) {
  const RankCode r = rank(x);
  const std::uint32_t next = (r.value + 1u) & State::full_mask(r.width);
  return unrank(RankCode{r.width, next});
}

}  // namespace mcpnet
