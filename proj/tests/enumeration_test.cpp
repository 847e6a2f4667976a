#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "example_networks.hpp"
#include "mcpnet/enumeration.hpp"

namespace mcpnet {
namespace {

std::string trajectory_text(const StateMap& f) {
  std::string out;
  for (std::uint32_t code : cycle_from_zero(f)) {
    if (!out.empty()) out += ' ';
    out += State(f.width(), code).to_string();
  }
  return out;
}

// The 24 conjugates of phi_3 as printed: six coordinate permutations, then
// the six images under each single bit flip.
const std::set<std::string> kPhi3Orbit = {
    "000 100 110 010 111 011 001 101", "000 010 110 100 111 101 001 011",
    "000 001 101 100 111 110 010 011", "000 001 011 010 111 110 100 101",
    "000 010 011 001 111 101 100 110", "000 100 101 001 111 011 010 110",
    "000 010 110 011 111 101 001 100", "000 011 001 101 111 100 110 010",
    "000 011 010 110 111 100 101 001", "000 001 100 101 111 110 011 010",
    "000 010 100 110 111 101 011 001", "000 001 101 011 111 110 010 100",
    "000 101 001 011 111 010 110 100", "000 100 110 101 111 011 001 010",
    "000 001 010 011 111 110 101 100", "000 101 100 110 111 010 011 001",
    "000 001 011 101 111 110 100 010", "000 100 010 110 111 011 101 001",
    "000 100 001 101 111 011 110 010", "000 010 001 011 111 101 110 100",
    "000 100 101 110 111 011 010 001", "000 010 011 110 111 101 100 001",
    "000 110 100 101 111 001 011 010", "000 110 010 011 111 001 101 100",
};

TEST(SymmetryTest, ActionOnStates) {
  // x_1 moves to coordinate 2, then coordinate 3 is flipped.
  const SignedPermutation s({2, 3, 1}, 0b001);
  EXPECT_EQ(s.apply(State::parse("100")), State::parse("011"));
  EXPECT_EQ(s.inverse().apply(s.apply(State::parse("110"))), State::parse("110"));
  EXPECT_THROW(SignedPermutation({1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({1, 2}, 4), std::invalid_argument);
}

TEST(SymmetryTest, GroupSize) {
  EXPECT_EQ(all_symmetries(1).size(), 2u);
  EXPECT_EQ(all_symmetries(3).size(), 48u);
  EXPECT_EQ(all_symmetries(4).size(), 384u);
  const auto g = all_symmetries(3);
  for (const auto& s : g) {
    const SignedPermutation inv = s.inverse();
    for (std::uint32_t k = 0; k < 8; ++k) ASSERT_EQ(inv.apply(s.apply(k)), k);
  }
}

TEST(SymmetryTest, IdentityConjugation) {
  const StateMap f = StateMap::phi_map(4);
  EXPECT_EQ(apply_symmetry(f, SignedPermutation::identity(4)), f);
}

TEST(SymmetryTest, PrintedConjugatesOfPhi3) {
  const StateMap f = StateMap::phi_map(3);
  EXPECT_EQ(trajectory_text(apply_symmetry(f, SignedPermutation::transposition(3, 1, 2))),
            "000 010 110 100 111 101 001 011");
  EXPECT_EQ(trajectory_text(apply_symmetry(f, SignedPermutation::flip(3, 1))),
            "000 010 110 011 111 101 001 100");
}

TEST(SymmetryTest, Phi3OrbitMatchesPrintedList) {
  const std::vector<StateMap> members = orbit(StateMap::phi_map(3));
  std::set<std::string> texts;
  for (const StateMap& m : members) texts.insert(trajectory_text(m));
  EXPECT_EQ(members.size(), 24u);
  EXPECT_EQ(texts, kPhi3Orbit);
}

TEST(SymmetryTest, CanonicalKeyIsOrbitInvariant) {
  for (const StateMap& f : {StateMap::phi_map(3), StateMap::from_network(examples::second_class_network())}) {
    const CanonicalKey key = canonical_key(f);
    for (const SignedPermutation& s : all_symmetries(3)) {
      ASSERT_EQ(canonical_key(apply_symmetry(f, s)), key);
    }
  }
  EXPECT_NE(canonical_key(StateMap::phi_map(3)),
            canonical_key(StateMap::from_network(examples::second_class_network())));
  EXPECT_THROW(canonical_key(StateMap::identity(3)), std::invalid_argument);
}

TEST(EnumerationTest, TwoBits) {
  const auto nets = enumerate_full_period(2);
  ASSERT_EQ(nets.size(), 2u);
  EXPECT_EQ(trajectory_text(nets[0].map), "00 01 11 10");
  EXPECT_EQ(nets[1].map, StateMap::phi_map(2));
  for (const auto& e : nets) EXPECT_EQ(StateMap::from_network(e.witness), e.map);
}

TEST(EnumerationTest, ThreeBitsCountsAndClasses) {
  const auto nets = enumerate_full_period(3);
  ASSERT_EQ(nets.size(), 48u);
  std::vector<StateMap> maps;
  for (const auto& e : nets) {
    ASSERT_EQ(StateMap::from_network(e.witness), e.map);
    ASSERT_TRUE(cycle_structure(e.map).is_full_period);
    maps.push_back(e.map);
  }
  ASSERT_TRUE(std::is_sorted(maps.begin(), maps.end(), [](const StateMap& a, const StateMap& b) {
    return cycle_from_zero(a) < cycle_from_zero(b);
  }));
  const auto classes = classify(maps);
  ASSERT_EQ(classes.size(), 2u);
  for (const IsoClass& c : classes) {
    EXPECT_EQ(c.members.size(), 24u);
    EXPECT_EQ(c.orbit_size, 24u);
  }
  EXPECT_EQ(orbit(StateMap::from_network(examples::second_class_network())).size(), 24u);
  const auto in = [&](const StateMap& f) { return std::find(maps.begin(), maps.end(), f) != maps.end(); };
  EXPECT_TRUE(in(StateMap::phi_map(3)));
  EXPECT_TRUE(in(StateMap::from_network(examples::second_class_network())));
}

TEST(EnumerationTest, LpPruningAgrees) {
  for (int n = 2; n <= 3; ++n) {
    const auto a = enumerate_full_period(n);
    const auto b = enumerate_full_period(n, {Pruning::kSeparabilityLp, std::nullopt});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].map, b[i].map);
  }
}

TEST(EnumerationTest, ShuffledSearchSameResult) {
  const auto base = enumerate_full_period(3);
  for (std::uint64_t seed : {1u, 99u, 123456u}) {
    const auto shuffled = enumerate_full_period(3, {Pruning::kThresholdTable, seed});
    ASSERT_EQ(shuffled.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(shuffled[i].map, base[i].map);
  }
}

TEST(EnumerationTest, RangeChecked) {
  EXPECT_THROW(enumerate_full_period(1), std::out_of_range);
  EXPECT_THROW(enumerate_full_period(5), std::out_of_range);
}

}  // namespace
}  // namespace mcpnet
