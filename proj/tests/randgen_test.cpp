#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "mcpnet/randgen.hpp"
#include "mcpnet/rank.hpp"

namespace mcpnet {
namespace {

TEST(RandgenTest, FirstValuesFollowPhi) {
  GeneratorState g = GeneratorState::phi(4);
  EXPECT_EQ(g.next_integer(), 0b1000u);
  EXPECT_EQ(g.next_integer(), 0b1100u);
  EXPECT_EQ(g.current(), State::parse("1100"));
}

TEST(RandgenTest, FullPeriodIsPermutation) {
  for (int n = 1; n <= 16; ++n) {
    GeneratorState g = GeneratorState::phi(n);
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<bool> seen(size, false);
    for (std::uint32_t t = 0; t < size; ++t) {
      const std::uint32_t k = g.next_integer();
      ASSERT_LT(k, size);
      ASSERT_FALSE(seen[k]);
      seen[k] = true;
    }
  }
}

TEST(RandgenTest, UnitStreamHasExactPeriod) {
  for (int n = 1; n <= 16; ++n) {
    GeneratorState g = GeneratorState::phi(n);
    const std::uint32_t size = std::uint32_t{1} << n;
    std::vector<double> first(size);
    std::set<double> distinct;
    for (auto& u : first) {
      u = g.next_unit();
      ASSERT_GE(u, 0.0);
      ASSERT_LT(u, 1.0);
      ASSERT_EQ(u * size, static_cast<double>(static_cast<std::uint32_t>(u * size)));
      distinct.insert(u);
    }
    ASSERT_EQ(distinct.size(), size);
    for (std::uint32_t t = 0; t < size; ++t) ASSERT_EQ(g.next_unit(), first[t]);
    EXPECT_EQ(g.current(), State::zeros(n));
  }
}

TEST(RandgenTest, UnitScaling) {
  GeneratorState g = GeneratorState::phi(3);
  EXPECT_EQ(g.next_unit(), 0.5);    // 100
  EXPECT_EQ(g.next_unit(), 0.75);   // 110
  EXPECT_EQ(g.next_unit(), 0.25);   // 010
  EXPECT_EQ(g.next_unit(), 0.875);  // 111
}

TEST(RandgenTest, U32OccupiesTopBits) {
  GeneratorState g = GeneratorState::phi(4);
  EXPECT_EQ(g.next_u32(), 0x80000000u);
  EXPECT_EQ(g.next_u32(), 0xC0000000u);
}

TEST(RandgenTest, LsbFirstReversesBits) {
  GeneratorState msb = GeneratorState::phi(5);
  GeneratorState lsb(std::make_shared<const StateMap>(StateMap::phi_map(5)), State::zeros(5),
                     BitOrder::kLsbFirst);
  for (int t = 0; t < 64; ++t) ASSERT_EQ(lsb.next_integer(), reverse_bits(msb.next_integer(), 5));
  EXPECT_EQ(reverse_bits(0b10110, 5), 0b01101u);
  EXPECT_EQ(reverse_bits(1, 1), 1u);
}

// The integer sequence is the rank sequence read back through unrank.
TEST(RandgenTest, RankCounterView) {
  GeneratorState g = GeneratorState::phi(10);
  for (std::uint32_t t = 1; t <= 2000; ++t) {
    const std::uint32_t k = g.next_integer();
    ASSERT_EQ(rank(State(10, k)).value, t % 1024u);
  }
}

TEST(RandgenTest, SeedWidthMustMatch) {
  EXPECT_THROW(GeneratorState(std::make_shared<const StateMap>(StateMap::phi_map(3)), State::zeros(4)),
               std::invalid_argument);
  EXPECT_THROW(GeneratorState(nullptr, State::zeros(4)), std::invalid_argument);
}

}  // namespace
}  // namespace mcpnet
