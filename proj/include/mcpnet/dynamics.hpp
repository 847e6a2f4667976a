#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mcpnet/phi.hpp"
#include "mcpnet/state.hpp"
#include "mcpnet/threshold.hpp"

namespace mcpnet {

// Total map on {0,1}^n stored as its 2^n-entry table of state codes.
class StateMap {
 public:
  // Throws std::invalid_argument unless table has 2^width entries, each a
  // valid code.
  StateMap(int width, std::vector<std::uint32_t> table);

  static StateMap tabulate(int width, const std::function<State(const State&)>& f);
  static StateMap from_network(const Network& net);
  static StateMap phi_map(int n);
  static StateMap identity(int n);

  int width() const { return width_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
  std::uint32_t operator()(std::uint32_t code) const { return table_[code]; }
  State operator()(const State& x) const { return State(width_, table_[x.code()]); }
  const std::vector<std::uint32_t>& table() const { return table_; }

  friend bool operator==(const StateMap&, const StateMap&) = default;
  friend auto operator<=>(const StateMap&, const StateMap&) = default;

 private:
  int width_;
  std::vector<std::uint32_t> table_;
};

struct CycleReport {
  std::vector<std::uint64_t> cycle_lengths;  // ascending
  std::uint64_t transient_state_count = 0;
  bool is_permutation = false;
  bool is_full_period = false;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

// F^t(s); F^0(s) = s.
State iterate(const StateMap& f, const State& s, std::uint64_t t);

// Exact decomposition of the functional graph into cycles and tree states.
CycleReport cycle_structure(const StateMap& f);

// Least L >= 1 with F^L(s) = s for some s, i.e. the shortest cycle length.
std::uint64_t period(const StateMap& f);

struct RhoShape {
  std::uint64_t tail = 0;   // steps before entering the cycle
  std::uint64_t cycle = 0;  // cycle length
};

// Brent's constant-memory cycle finder on the single trajectory from s.
RhoShape rho_shape(const StateMap& f, const State& s);

// The iterates s, F(s), ... F^{count-1}(s).
Trajectory trajectory(const StateMap& f, const State& s, std::uint64_t count);

}  // namespace mcpnet
