#pragma once

#include <cstdint>
#include <memory>

#include "mcpnet/dynamics.hpp"

namespace mcpnet {

// How a state is read as an integer. MSB-first (x_1 most significant) is
// the convention everywhere else in the library; LSB-first exists so the
// statistical verdicts can be checked for insensitivity to it.
enum class BitOrder { kMsbFirst, kLsbFirst };

// Integer generator k -> code(F(state(k))) and its scaled unit-interval
// version. Sequential: every call advances the position.
class GeneratorState {
 public:
  GeneratorState(std::shared_ptr<const StateMap> map, State seed,
                 BitOrder order = BitOrder::kMsbFirst);

  // Generator for phi on n bits, seeded at all-zeros unless given.
  static GeneratorState phi(int n);

  int width() const { return map_->width(); }
  const State& current() const { return current_; }

  // Advance, then return the new state's integer encoding in [0, 2^n).
  std::uint32_t next_integer();

  // next_integer() / 2^n, exact.
  double next_unit();

  // next_integer() shifted into the top n bits of a 32-bit word.
  std::uint32_t next_u32();

 private:
  std::shared_ptr<const StateMap> map_;
  State current_;
  BitOrder order_;
};

// Reverses the n low bits of code.
std::uint32_t reverse_bits(std::uint32_t code, int n);

}  // namespace mcpnet
