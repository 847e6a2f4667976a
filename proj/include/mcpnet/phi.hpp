#pragma once

#include <vector>

#include "mcpnet/state.hpp"

namespace mcpnet {

// Sequence of states of a common width.
class Trajectory {
 public:
  Trajectory(int width, std::vector<State> states);

  int width() const { return width_; }
  const std::vector<State>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const State& operator[](std::size_t i) const { return states_[i]; }

  // One state per line, bits concatenated.
  std::string to_text() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  int width_;
  std::vector<State> states_;
};

// The maximal-period map: with m the alternating prefix length of x, the
// first m output bits are the complement of x_m and the rest are copied.
State phi(const State& x);

// Bit-by-bit evaluation of the same rule; kept as a differential reference.
State phi_reference(const State& x);

// The 2^n iterates of phi from the all-zeros state. Throws std::out_of_range
// unless 1 <= n <= kMaxWidth.
Trajectory phi_trajectory(int n);

// Appends a 0 bit to each state of t and concatenates the complement of the
// result. Throws std::invalid_argument unless t is phi_trajectory(n) for some
// n < kMaxWidth.
Trajectory double_trajectory(const Trajectory& t);

}  // namespace mcpnet
