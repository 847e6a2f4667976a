#include "mcpnet/randgen.hpp"

#include <cmath>
#include <stdexcept>

namespace mcpnet {

GeneratorState::GeneratorState(std::shared_ptr<const StateMap> map, State seed, BitOrder order)
    : map_(std::move(map)), current_(seed), order_(order) {
  if (!map_) throw std::invalid_argument("generator needs a state map");
  if (seed.width() != map_->width()) throw std::invalid_argument("seed width differs from map width");
}

GeneratorState GeneratorState::phi(int n) {
  return GeneratorState(std::make_shared<const StateMap>(StateMap::phi_map(n)), State::zeros(n));
}

std::uint32_t reverse_bits(std::uint32_t code, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) out |= ((code >> i) & 1u) << (n - 1 - i);
  return out;
}

std::uint32_t GeneratorState::next_integer() {
  current_ = (*map_)(current_);
  return order_ == BitOrder::kMsbFirst ? current_.code() : reverse_bits(current_.code(), width());
}

double GeneratorState::next_unit() { return std::ldexp(static_cast<double>(next_integer()), -width()); }

std::uint32_t GeneratorState::next_u32() { return next_integer() << (32 - width()); }

}  // namespace mcpnet
