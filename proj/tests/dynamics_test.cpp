#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "example_networks.hpp"
#include "mcpnet/dynamics.hpp"

namespace mcpnet {
namespace {

TEST(DynamicsTest, IdentityCycles) {
  const CycleReport r = cycle_structure(StateMap::identity(2));
  EXPECT_EQ(r.cycle_lengths, (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(r.transient_state_count, 0u);
  EXPECT_TRUE(r.is_permutation);
  EXPECT_FALSE(r.is_full_period);
  EXPECT_EQ(period(StateMap::identity(5)), 1u);
}

TEST(DynamicsTest, ConstantMap) {
  const StateMap zero(2, {0, 0, 0, 0});
  const CycleReport r = cycle_structure(zero);
  EXPECT_EQ(r.cycle_lengths, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(r.transient_state_count, 3u);
  EXPECT_FALSE(r.is_permutation);
  EXPECT_EQ(rho_shape(zero, State::parse("11")).tail, 1u);
  EXPECT_EQ(rho_shape(zero, State::parse("11")).cycle, 1u);
}

TEST(DynamicsTest, PhiIsSingleCycle) {
  for (int n = 1; n <= 20; ++n) {
    const StateMap f = StateMap::phi_map(n);
    const CycleReport r = cycle_structure(f);
    ASSERT_EQ(r.cycle_lengths, (std::vector<std::uint64_t>{std::uint64_t{1} << n})) << n;
    EXPECT_TRUE(r.is_full_period);
    EXPECT_TRUE(r.is_permutation);
    EXPECT_EQ(r.transient_state_count, 0u);
    EXPECT_EQ(period(f), std::uint64_t{1} << n);
  }
}

TEST(DynamicsTest, FourNeuronExamplePeriod) {
  const StateMap f = StateMap::from_network(examples::four_neuron_network());
  EXPECT_EQ(period(f), 16u);
  EXPECT_TRUE(cycle_structure(f).is_full_period);
  EXPECT_EQ(iterate(f, State::zeros(4), 16), State::zeros(4));
  EXPECT_EQ(iterate(f, State::zeros(4), 3), State::parse("1101"));
}

TEST(DynamicsTest, FromNetworkMatchesEvaluation) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(StateMap::from_network(build_canonical_network(n)), StateMap::phi_map(n));
  }
}

TEST(DynamicsTest, MixedCycles) {
  // 0 -> 1 -> 0, 2 -> 3 -> 3, so one 2-cycle, one fixed point and one tree state.
  const StateMap f(2, {1, 0, 3, 3});
  const CycleReport r = cycle_structure(f);
  EXPECT_EQ(r.cycle_lengths, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(r.transient_state_count, 1u);
  EXPECT_EQ(period(f), 1u);
}

// Random maps: cycle lengths and tree states partition the space, and the
// rho shape from every start agrees with a direct first-repeat scan.
TEST(DynamicsTest, RandomMapsConsistent) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<std::uint32_t> table(size);
    for (auto& v : table) v = static_cast<std::uint32_t>(rng() % size);
    const StateMap f(n, table);
    const CycleReport r = cycle_structure(f);
    std::uint64_t total = r.transient_state_count;
    for (std::uint64_t len : r.cycle_lengths) total += len;
    ASSERT_EQ(total, size);
    ASSERT_TRUE(std::is_sorted(r.cycle_lengths.begin(), r.cycle_lengths.end()));
    for (std::uint32_t s = 0; s < size; ++s) {
      std::vector<std::int64_t> first(size, -1);
      std::uint32_t x = s;
      std::int64_t t = 0;
      while (first[x] < 0) {
        first[x] = t++;
        x = f(x);
      }
      const RhoShape rho = rho_shape(f, State(n, s));
      ASSERT_EQ(rho.tail, static_cast<std::uint64_t>(first[x]));
      ASSERT_EQ(rho.cycle, static_cast<std::uint64_t>(t - first[x]));
    }
  }
}

TEST(DynamicsTest, TrajectoryHelper) {
  const Trajectory t = trajectory(StateMap::phi_map(3), State::zeros(3), 8);
  EXPECT_EQ(t, phi_trajectory(3));
  EXPECT_EQ(trajectory(StateMap::phi_map(3), State::zeros(3), 1).size(), 1u);
}

TEST(DynamicsTest, ConstructorValidates) {
  EXPECT_THROW(StateMap(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(StateMap(2, {0, 1, 2, 4}), std::invalid_argument);
}

}  // namespace
}  // namespace mcpnet
