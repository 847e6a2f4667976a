#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcpnet/state.hpp"

namespace mcpnet {

// Linear threshold function x -> H(sum_j w_j x_j - theta) with H(0) = 1.
struct ThresholdNeuron {
  std::vector<std::int64_t> weights;
  std::int64_t theta = 0;

  int width() const { return static_cast<int>(weights.size()); }

  friend bool operator==(const ThresholdNeuron&, const ThresholdNeuron&) = default;
};

class Network {
 public:
  // Throws std::invalid_argument unless there are exactly n neurons of n
  // weights each.
  Network(int width, std::vector<ThresholdNeuron> neurons);

  int width() const { return width_; }
  const std::vector<ThresholdNeuron>& neurons() const { return neurons_; }
  const ThresholdNeuron& neuron(int i) const { return neurons_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  int width_;
  std::vector<ThresholdNeuron> neurons_;
};

// Throws std::invalid_argument on width mismatch.
int eval_neuron(const ThresholdNeuron& f, const State& x);

// Synchronous update: every neuron reads the same x.
State eval_network(const Network& net, const State& x);

// Integer weights of the recursive construction realizing phi. The weights
// grow like Fibonacci numbers in n but stay far inside int64 for n <= 24.
Network build_canonical_network(int n);

// True iff build_canonical_network(n) agrees with phi on all of {0,1}^n.
bool verify_realization(int n);

// True iff net agrees with phi on all of {0,1}^n.
bool realizes_phi(const Network& net);

// Renders neuron as "H(-x1+x2-x3)" style text, with the threshold moved to
// the constant term.
std::string heaviside_expression(const ThresholdNeuron& f);

// Network file: first line n, then one line per neuron with its n weights
// followed by theta, space separated.
std::string format_network(const Network& net);

// Throws std::invalid_argument on malformed input.
Network parse_network(std::istream& in);
Network read_network_file(const std::string& path);

// ---------------------------------------------------------------------------
// Linear separability of (partial) Boolean functions.

inline constexpr int kMaxSeparabilityWidth = 5;

// Partial truth table over {0,1}^n, n <= kMaxSeparabilityWidth, packed into
// two bitmasks indexed by state code.
class PartialTruthTable {
 public:
  explicit PartialTruthTable(int width);

  // Full table from a packed 2^n-bit value: bit k is f(state with code k).
  static PartialTruthTable full(int width, std::uint32_t table);

  int width() const { return width_; }
  std::uint32_t defined_mask() const { return defined_; }
  std::uint32_t value_mask() const { return values_; }
  std::size_t size() const;

  // Throws std::invalid_argument if x is already assigned the other value.
  void assign(const State& x, int value);
  void assign(std::uint32_t code, int value);
  std::optional<int> at(std::uint32_t code) const;

  friend bool operator==(const PartialTruthTable&, const PartialTruthTable&) = default;

 private:
  int width_;
  std::uint32_t defined_ = 0;
  std::uint32_t values_ = 0;
};

// Returns an integer witness neuron reproducing every assignment, or nullopt
// when no real weights separate the ones from the zeros. Decided exactly by
// a rational phase-one simplex. Throws std::invalid_argument for widths
// above kMaxSeparabilityWidth.
std::optional<ThresholdNeuron> is_threshold(const PartialTruthTable& t);

// Search over integer weights in [-bound, bound]; the threshold is then
// chosen optimally. Intended for widths <= 4 as a differential check.
std::optional<ThresholdNeuron> is_threshold_bounded(const PartialTruthTable& t, int bound);

// True iff the neuron reproduces every assignment of t.
bool consistent(const ThresholdNeuron& f, const PartialTruthTable& t);

// All full truth tables of width n that are linear threshold functions, as
// packed 2^n-bit values in increasing order. Cached per width.
const std::vector<std::uint32_t>& threshold_functions(int n);

}  // namespace mcpnet
