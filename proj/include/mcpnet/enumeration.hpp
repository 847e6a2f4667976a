#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcpnet/dynamics.hpp"
#include "mcpnet/threshold.hpp"

namespace mcpnet {

// Coordinate permutation followed by bit flips. Acts on a state x by moving
// x_i to coordinate perm[i-1] and then complementing every coordinate j with
// bit j of `flips` set (flips uses the same MSB-first layout as State).
class SignedPermutation {
 public:
  // perm holds 1-based targets. Throws std::invalid_argument unless perm is
  // a bijection of {1..n} and flips fits in n bits.
  SignedPermutation(std::vector<int> perm, std::uint32_t flips);

  static SignedPermutation identity(int n);
  static SignedPermutation transposition(int n, int i, int j);
  static SignedPermutation flip(int n, int i);

  int width() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  std::uint32_t flips() const { return flips_; }

  std::uint32_t apply(std::uint32_t code) const;
  State apply(const State& x) const { return State(x.width(), apply(x.code())); }
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::uint32_t flips_;
};

// Every element of the group, n! * 2^n of them, in a fixed order.
std::vector<SignedPermutation> all_symmetries(int n);

// The conjugate sigma o F o sigma^-1.
StateMap apply_symmetry(const StateMap& f, const SignedPermutation& sigma);

using CanonicalKey = std::vector<std::uint8_t>;

// Lexicographically least trajectory-from-zero over all conjugates of f.
// Throws std::invalid_argument unless f is full-period with width <= 8.
CanonicalKey canonical_key(const StateMap& f);

// Distinct conjugates of f, sorted.
std::vector<StateMap> orbit(const StateMap& f);

// Codes of the single cycle of a full-period map, starting from zero.
std::vector<std::uint32_t> cycle_from_zero(const StateMap& f);

struct EnumeratedNetwork {
  StateMap map;
  Network witness;
};

enum class Pruning {
  kThresholdTable,  // candidate sets over the precomputed threshold functions
  kSeparabilityLp,  // is_threshold on each accumulated partial table
};

struct EnumerationOptions {
  Pruning pruning = Pruning::kThresholdTable;
  // When set, the order in which successor states are tried is shuffled
  // with this seed. The result set does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

// All full-period maps on {0,1}^n whose coordinates are threshold
// functions, each once, sorted by trajectory from zero. Throws
// std::out_of_range unless 2 <= n <= 4.
std::vector<EnumeratedNetwork> enumerate_full_period(int n, const EnumerationOptions& options = {});

struct IsoClass {
  CanonicalKey canonical_key;
  std::vector<StateMap> members;
  std::size_t orbit_size = 0;
};

// Partition by canonical key, classes sorted by key.
std::vector<IsoClass> classify(const std::vector<StateMap>& maps);

}  // namespace mcpnet
