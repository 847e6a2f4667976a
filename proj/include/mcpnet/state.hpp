#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mcpnet {

inline constexpr int kMaxWidth = 24;

// Joint firing pattern (x_1, ..., x_n) of an n-neuron network, packed into a
// single word. x_1 is the most significant of the n low bits, so the packed
// word is also the MSB-first integer encoding of the state.
class State {
 public:
  State() = default;

  // Throws std::out_of_range if width is outside [1, kMaxWidth] or if
  // code does not fit in width bits.
  State(int width, std::uint32_t code);

  static State zeros(int width) { return State(width, 0); }
  static State ones(int width) { return State(width, full_mask(width)); }

  // The alternating vector ending in 1, (..., 0, 1, 0, 1).
  static State alternating_ending_one(int width);
  // The alternating vector ending in 0, (..., 1, 0, 1, 0).
  static State alternating_ending_zero(int width);

  // Parses a string of '0'/'1' characters, x_1 first.
  static State parse(std::string_view bits);

  int width() const { return width_; }
  std::uint32_t code() const { return code_; }

  // 1-based access, matching x_1 ... x_n.
  int bit(int i) const { return static_cast<int>((code_ >> (width_ - i)) & 1u); }
  State with_bit(int i, int value) const;

  State complement() const { return State(width_, ~code_ & full_mask(width_), Unchecked{}); }

  // Largest m such that (x_1, ..., x_m) alternates. Always in [1, width].
  int alternating_prefix_length() const;

  std::string to_string() const;

  static constexpr std::uint32_t full_mask(int width) {
    return width >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << width) - 1u;
  }

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  struct Unchecked {};
  State(int width, std::uint32_t code, Unchecked) : width_(width), code_(code) {}

  int width_ = 1;
  std::uint32_t code_ = 0;
};

// Throws std::out_of_range unless 1 <= width <= kMaxWidth.
void check_width(int width);

inline State complement(const State& x) { return x.complement(); }
inline int alternating_prefix_length(const State& x) { return x.alternating_prefix_length(); }

inline std::uint32_t state_to_integer(const State& x) { return x.code(); }
State integer_to_state(int width, std::uint64_t k);

}  // namespace mcpnet
