#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcpnet/dynamics.hpp"
#include "mcpnet/randgen.hpp"

namespace mcpnet {

// ---------------------------------------------------------------------------
// Structure of consecutive bits along iterates.

// For every coordinate i, how often each triple (x_i, F(x)_i, F^2(x)_i)
// occurs over all x in {0,1}^n.
class TripleProfile {
 public:
  explicit TripleProfile(int width) : counts_(static_cast<std::size_t>(width), Row{}) {}

  int width() const { return static_cast<int>(counts_.size()); }
  std::uint64_t count(int i, int a, int b, int c) const {
    return counts_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a * 4 + b * 2 + c)];
  }
  void add(int i, int a, int b, int c) {
    ++counts_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a * 4 + b * 2 + c)];
  }
  // Triples (a, b, c), encoded 4a + 2b + c, that never occur at coordinate i.
  std::vector<int> missing(int i) const;

 private:
  using Row = std::array<std::uint64_t, 8>;
  std::vector<Row> counts_;
};

TripleProfile triple_profile(const StateMap& f);

// ---------------------------------------------------------------------------
// Chi-square machinery.

struct ChiSquare {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Upper tail of the chi-square distribution.
double chi_square_upper_tail(double statistic, double degrees_of_freedom);

// P(X >= k) for X ~ Poisson(mean).
double poisson_upper_tail(std::uint64_t k, double mean);

// Pearson test of observed against expected counts. Adjacent bins are merged
// left to right until each merged bin expects at least 5; a short remainder
// joins the last bin. Throws std::invalid_argument if sizes differ, any
// expectation is non-positive, or fewer than two bins survive merging.
ChiSquare chi_square_test(std::span<const double> observed, std::span<const double> expected);

double goodness_of_fit_pvalue(std::span<const double> observed, std::span<const double> expected);

// ---------------------------------------------------------------------------
// Test battery over unit-interval streams.

enum class TestKind {
  kBirthdaySpacings,
  kCollision,
  kGap,
  kSimpPoker,
  kCouponCollector,
  kMaxOfT,
  kRandomWalk,
};

inline constexpr std::array<TestKind, 7> kBatteryOrder = {
    TestKind::kBirthdaySpacings, TestKind::kCollision,  TestKind::kGap,
    TestKind::kSimpPoker,        TestKind::kCouponCollector, TestKind::kMaxOfT,
    TestKind::kRandomWalk,
};

std::string test_name(TestKind kind);

struct BatteryConfig {
  static constexpr int kVersion = 1;

  struct BirthdaySpacings {
    int replicates = 16;
    int points = 4096;
    int dimensions = 2;
    int bits_per_coordinate = 16;
  } birthday_spacings;

  struct Collision {
    int balls = 16384;
    int dimensions = 2;
    int bits_per_coordinate = 10;
  } collision;

  struct Gap {
    int gaps = 16384;
    double alpha = 0.5;
    double beta = 0.625;
    int max_gap = 64;
    int max_values = 1 << 20;
  } gap;

  struct SimpPoker {
    int hands = 32768;
    int hand_size = 5;
    int alphabet = 8;
  } simp_poker;

  struct CouponCollector {
    int segments = 8192;
    int alphabet = 8;
    int max_length = 48;
    int max_values = 1 << 20;
  } coupon_collector;

  struct MaxOfT {
    int groups = 32768;
    int group_size = 8;
    int bins = 32;
  } max_of_t;

  struct RandomWalk {
    int walks = 8192;
    int length = 64;
  } random_walk;

  // Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

// JSON with one object per test; missing keys keep their defaults.
BatteryConfig parse_battery_config(std::istream& in);
BatteryConfig read_battery_config(const std::string& path);
std::string format_battery_config(const BatteryConfig& config);

// Number of stream values handed to a test by run_battery.
std::size_t stream_budget(TestKind kind, const BatteryConfig& config);

struct TestResult {
  std::string name;
  std::string parameters;
  double statistic = 0.0;
  double p_value = 1.0;
  bool pass = false;
};

inline constexpr double kPassLow = 0.001;
inline constexpr double kPassHigh = 0.999;
inline bool in_pass_band(double p) { return kPassLow <= p && p <= kPassHigh; }

class InsufficientStream : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic for a deterministic stream. Throws InsufficientStream when
// the stream runs out before the sample is complete.
TestResult run_test(TestKind kind, std::span<const double> stream, const BatteryConfig& config);

using UnitSource = std::function<double()>;

// Runs every test in kBatteryOrder, each on its own consecutive slice of
// stream_budget values drawn from the source.
std::vector<TestResult> run_battery(const UnitSource& source, const BatteryConfig& config);
std::vector<TestResult> run_battery(GeneratorState& gen, const BatteryConfig& config);

bool all_pass(const std::vector<TestResult>& results);

// Fixed-width table: name, statistic, p-value, PASS/FAIL.
std::string format_results(const std::vector<TestResult>& results);

// 64-bit Mersenne Twister, default seed, top 53 bits per value. The
// calibration stream the battery is expected to pass.
class ReferenceGenerator {
 public:
  static constexpr std::uint64_t kSeed = 5489u;
  explicit ReferenceGenerator(std::uint64_t seed = kSeed) : engine_(seed) {}
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mcpnet
