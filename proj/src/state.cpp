#include "mcpnet/state.hpp"

#include <bit>
#include <stdexcept>

namespace mcpnet {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw std::out_of_range("state width must be in [1, " + std::to_string(kMaxWidth) +
                            "], got " + std::to_string(width));
  }
}

State::State(int width, std::uint32_t code) : width_(width), code_(code) {
  check_width(width);
  if ((code & ~full_mask(width)) != 0) {
    throw std::out_of_range("state code " + std::to_string(code) + " does not fit in " +
                            std::to_string(width) + " bits");
  }
}

State State::alternating_ending_one(int width) {
  check_width(width);
  // 0x55555555 has 1s at even positions, so the lowest bit (x_n) is 1.
  return State(width, 0x55555555u & full_mask(width));
}

State State::alternating_ending_zero(int width) {
  check_width(width);
  return State(width, 0xAAAAAAAAu & full_mask(width));
}

State State::parse(std::string_view bits) {
  const int width = static_cast<int>(bits.size());
  check_width(width);
  std::uint32_t code = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("state must consist of '0' and '1' characters: " +
                                  std::string(bits));
    }
    code = (code << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return State(width, code);
}

State State::with_bit(int i, int value) const {
  if (i < 1 || i > width_) throw std::out_of_range("bit index out of range");
  const std::uint32_t m = std::uint32_t{1} << (width_ - i);
  return State(width_, value ? (code_ | m) : (code_ & ~m), Unchecked{});
}

int State::alternating_prefix_length() const {
  if (width_ == 1) return 1;
  // Bit p of diff is x_{n-p} xor x_{n-p-1}; the pair (x_1, x_2) sits at
  // position n-2. Count how many adjacent pairs differ starting from x_1.
  const std::uint32_t diff = (code_ ^ (code_ >> 1)) & full_mask(width_ - 1);
  const std::uint32_t aligned = diff << (32 - (width_ - 1));
  const int run = std::countl_one(aligned);
  return 1 + (run < width_ - 1 ? run : width_ - 1);
}

std::string State::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 1; i <= width_; ++i) {
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

State integer_to_state(int width, std::uint64_t k) {
  check_width(width);
  if (k > State::full_mask(width)) {
    throw std::out_of_range("integer " + std::to_string(k) + " out of range for width " +
                            std::to_string(width));
  }
  return State(width, static_cast<std::uint32_t>(k));
}

}  // namespace mcpnet
