#include "mcpnet/stattests.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

namespace mcpnet {

std::vector<int> TripleProfile::missing(int i) const {
  std::vector<int> out;
  for (int t = 0; t < 8; ++t) {
    if (counts_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t)] == 0) out.push_back(t);
  }
  return out;
}

TripleProfile triple_profile(const StateMap& f) {
  const int n = f.width();
  TripleProfile profile(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const std::uint32_t y = f(x);
    const std::uint32_t z = f(y);
    for (int i = 1; i <= n; ++i) {
      const int shift = n - i;
      profile.add(i, static_cast<int>((x >> shift) & 1u), static_cast<int>((y >> shift) & 1u),
                  static_cast<int>((z >> shift) & 1u));
    }
  }
  return profile;
}

double chi_square_upper_tail(double statistic, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0) throw std::invalid_argument("degrees of freedom must be positive");
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(degrees_of_freedom / 2.0, statistic / 2.0);
}

double poisson_upper_tail(std::uint64_t k, double mean) {
  if (k == 0) return 1.0;
  // P(X >= k) = P(k, mean), the regularized lower incomplete gamma.
  return boost::math::gamma_p(static_cast<double>(k), mean);
}

ChiSquare chi_square_test(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("bin counts differ");
  std::vector<double> obs;
  std::vector<double> exp;
  double acc_obs = 0;
  double acc_exp = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(expected[i] > 0)) throw std::invalid_argument("expected counts must be positive");
    acc_obs += observed[i];
    acc_exp += expected[i];
    if (acc_exp >= 5.0) {
      obs.push_back(acc_obs);
      exp.push_back(acc_exp);
      acc_obs = acc_exp = 0;
    }
  }
  if (acc_exp > 0) {
    if (exp.empty()) {
      obs.push_back(acc_obs);
      exp.push_back(acc_exp);
    } else {
      obs.back() += acc_obs;
      exp.back() += acc_exp;
    }
  }
  if (exp.size() < 2) throw std::invalid_argument("fewer than two categories after merging");

  ChiSquare result;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    const double d = obs[i] - exp[i];
    result.statistic += d * d / exp[i];
  }
  result.degrees_of_freedom = static_cast<int>(exp.size()) - 1;
  result.p_value = chi_square_upper_tail(result.statistic, result.degrees_of_freedom);
  return result;
}

double goodness_of_fit_pvalue(std::span<const double> observed, std::span<const double> expected) {
  return chi_square_test(observed, expected).p_value;
}

std::string test_name(TestKind kind) {
  switch (kind) {
    case TestKind::kBirthdaySpacings: return "birthday_spacings";
    case TestKind::kCollision: return "collision";
    case TestKind::kGap: return "gap";
    case TestKind::kSimpPoker: return "simp_poker";
    case TestKind::kCouponCollector: return "coupon_collector";
    case TestKind::kMaxOfT: return "max_of_t";
    case TestKind::kRandomWalk: return "random_walk";
  }
  throw std::invalid_argument("unknown test kind");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid battery config: " + what);
}

std::uint32_t digit(double u, std::uint32_t d) {
  const auto k = static_cast<std::uint32_t>(u * d);
  return std::min(k, d - 1);
}

// Top `bits` bits of u.
std::uint64_t top_bits(double u, int bits) {
  return digit(u, std::uint32_t{1} << bits);
}

std::string params(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out << ' ';
    first = false;
    out << k << '=' << v;
  }
  return out.str();
}

TestResult finish(TestKind kind, std::string parameters, double statistic, double p) {
  p = std::clamp(p, 0.0, 1.0);
  return TestResult{test_name(kind), std::move(parameters), statistic, p, in_pass_band(p)};
}

void need(std::span<const double> stream, std::size_t n, TestKind kind) {
  if (stream.size() < n) {
    throw InsufficientStream(test_name(kind) + " needs " + std::to_string(n) + " values, got " +
                             std::to_string(stream.size()));
  }
}

// Stirling numbers of the second kind S(k, r) for r <= k as doubles.
std::vector<std::vector<double>> stirling2(int kmax) {
  std::vector<std::vector<double>> s(static_cast<std::size_t>(kmax + 1),
                                     std::vector<double>(static_cast<std::size_t>(kmax + 1), 0.0));
  s[0][0] = 1.0;
  for (int k = 1; k <= kmax; ++k) {
    for (int r = 1; r <= k; ++r) {
      s[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
          r * s[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r)] +
          s[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r - 1)];
    }
  }
  return s;
}

TestResult birthday_spacings(std::span<const double> stream, const BatteryConfig::BirthdaySpacings& c) {
  const std::size_t n = static_cast<std::size_t>(c.points);
  const int bits = c.bits_per_coordinate * c.dimensions;
  const double days = std::ldexp(1.0, bits);
  need(stream, static_cast<std::size_t>(c.replicates) * n * static_cast<std::size_t>(c.dimensions),
       TestKind::kBirthdaySpacings);
  std::size_t pos = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> birthdays(n);
  std::vector<std::uint64_t> spacings(n);
  for (int rep = 0; rep < c.replicates; ++rep) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t cell = 0;
      for (int d = 0; d < c.dimensions; ++d) {
        cell = (cell << c.bits_per_coordinate) | top_bits(stream[pos++], c.bits_per_coordinate);
      }
      birthdays[i] = cell;
    }
    std::sort(birthdays.begin(), birthdays.end());
    for (std::size_t i = 0; i + 1 < n; ++i) spacings[i] = birthdays[i + 1] - birthdays[i];
    spacings[n - 1] = birthdays[0] + (std::uint64_t{1} << bits) - birthdays[n - 1];
    std::sort(spacings.begin(), spacings.end());
    for (std::size_t i = 1; i < n; ++i) total += spacings[i] == spacings[i - 1] ? 1 : 0;
  }
  const double nd = static_cast<double>(n);
  const double mean = c.replicates * nd * nd * nd / (4.0 * days);
  return finish(TestKind::kBirthdaySpacings,
                params({{"N", c.replicates}, {"n", c.points}, {"t", c.dimensions},
                        {"bits", c.bits_per_coordinate}}),
                static_cast<double>(total), poisson_upper_tail(total, mean));
}

TestResult collision(std::span<const double> stream, const BatteryConfig::Collision& c) {
  const std::size_t n = static_cast<std::size_t>(c.balls);
  const int bits = c.bits_per_coordinate * c.dimensions;
  need(stream, n * static_cast<std::size_t>(c.dimensions), TestKind::kCollision);
  std::vector<bool> urn(std::size_t{1} << bits, false);
  std::uint64_t collisions = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t cell = 0;
    for (int d = 0; d < c.dimensions; ++d) {
      cell = (cell << c.bits_per_coordinate) | top_bits(stream[pos++], c.bits_per_coordinate);
    }
    if (urn[cell]) {
      ++collisions;
    } else {
      urn[cell] = true;
    }
  }
  const double k = std::ldexp(1.0, bits);
  const double nd = static_cast<double>(n);
  // E[collisions] = n - k + k (1 - 1/k)^n
  const double mean = nd - k + k * std::exp(nd * std::log1p(-1.0 / k));
  return finish(TestKind::kCollision,
                params({{"n", c.balls}, {"t", c.dimensions}, {"bits", c.bits_per_coordinate}}),
                static_cast<double>(collisions), poisson_upper_tail(collisions, mean));
}

TestResult gap(std::span<const double> stream, const BatteryConfig::Gap& c) {
  const double p = c.beta - c.alpha;
  std::vector<double> observed(static_cast<std::size_t>(c.max_gap + 1), 0.0);
  int collected = 0;
  int run = 0;
  for (double u : stream) {
    if (collected == c.gaps) break;
    if (c.alpha <= u && u < c.beta) {
      observed[static_cast<std::size_t>(std::min(run, c.max_gap))] += 1;
      ++collected;
      run = 0;
    } else {
      ++run;
    }
  }
  if (collected < c.gaps) {
    throw InsufficientStream("gap collected " + std::to_string(collected) + " of " +
                             std::to_string(c.gaps) + " gaps");
  }
  std::vector<double> expected(observed.size());
  double q = 1.0;
  for (int r = 0; r < c.max_gap; ++r) {
    expected[static_cast<std::size_t>(r)] = c.gaps * p * q;
    q *= 1.0 - p;
  }
  expected.back() = c.gaps * q;
  const ChiSquare chi = chi_square_test(observed, expected);
  return finish(TestKind::kGap,
                params({{"n", c.gaps}, {"alpha", c.alpha}, {"beta", c.beta}, {"t", c.max_gap}}),
                chi.statistic, chi.p_value);
}

TestResult simp_poker(std::span<const double> stream, const BatteryConfig::SimpPoker& c) {
  const auto k = static_cast<std::size_t>(c.hand_size);
  const auto d = static_cast<std::uint32_t>(c.alphabet);
  need(stream, static_cast<std::size_t>(c.hands) * k, TestKind::kSimpPoker);
  const int rmax = std::min(c.hand_size, c.alphabet);
  std::vector<double> observed(static_cast<std::size_t>(rmax), 0.0);
  std::vector<bool> seen(d);
  std::size_t pos = 0;
  for (int h = 0; h < c.hands; ++h) {
    std::fill(seen.begin(), seen.end(), false);
    int distinct = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t v = digit(stream[pos++], d);
      if (!seen[v]) {
        seen[v] = true;
        ++distinct;
      }
    }
    observed[static_cast<std::size_t>(distinct - 1)] += 1;
  }
  // P(r distinct) = d (d-1) ... (d-r+1) S(k, r) / d^k
  const auto s = stirling2(c.hand_size);
  std::vector<double> expected(observed.size());
  double falling = 1.0;
  for (int r = 1; r <= rmax; ++r) {
    falling *= static_cast<double>(c.alphabet - r + 1);
    expected[static_cast<std::size_t>(r - 1)] =
        c.hands * falling * s[k][static_cast<std::size_t>(r)] / std::pow(c.alphabet, c.hand_size);
  }
  const ChiSquare chi = chi_square_test(observed, expected);
  return finish(TestKind::kSimpPoker,
                params({{"n", c.hands}, {"k", c.hand_size}, {"d", c.alphabet}}), chi.statistic,
                chi.p_value);
}

TestResult coupon_collector(std::span<const double> stream, const BatteryConfig::CouponCollector& c) {
  const auto d = static_cast<std::uint32_t>(c.alphabet);
  // Bins: segment lengths d .. max_length - 1, then >= max_length.
  const int bins = c.max_length - c.alphabet + 1;
  std::vector<double> observed(static_cast<std::size_t>(bins), 0.0);
  std::vector<bool> seen(d);
  std::size_t pos = 0;
  for (int seg = 0; seg < c.segments; ++seg) {
    std::fill(seen.begin(), seen.end(), false);
    std::uint32_t distinct = 0;
    int length = 0;
    while (distinct < d) {
      if (pos == stream.size()) {
        throw InsufficientStream("coupon_collector completed " + std::to_string(seg) + " of " +
                                 std::to_string(c.segments) + " segments");
      }
      const std::uint32_t v = digit(stream[pos++], d);
      ++length;
      if (!seen[v]) {
        seen[v] = true;
        ++distinct;
      }
    }
    observed[static_cast<std::size_t>(std::min(length, c.max_length) - c.alphabet)] += 1;
  }
  // Distribution of the completion time via the chain on the number of
  // distinct values seen so far.
  std::vector<double> dist(d + 1, 0.0);
  dist[0] = 1.0;
  std::vector<double> expected(observed.size(), 0.0);
  double done = 0.0;
  for (int r = 1; r < c.max_length; ++r) {
    std::vector<double> next(d + 1, 0.0);
    for (std::uint32_t j = 0; j < d; ++j) {
      const double stay = static_cast<double>(j) / d;
      next[j] += dist[j] * stay;
      next[j + 1] += dist[j] * (1.0 - stay);
    }
    const double finished_now = next[d];
    next[d] = 0.0;
    dist = std::move(next);
    if (r >= c.alphabet) {
      expected[static_cast<std::size_t>(r - c.alphabet)] = c.segments * finished_now;
      done += finished_now;
    }
  }
  expected.back() = c.segments * (1.0 - done);
  const ChiSquare chi = chi_square_test(observed, expected);
  return finish(TestKind::kCouponCollector,
                params({{"n", c.segments}, {"d", c.alphabet}, {"t", c.max_length}}),
                chi.statistic, chi.p_value);
}

TestResult max_of_t(std::span<const double> stream, const BatteryConfig::MaxOfT& c) {
  const auto t = static_cast<std::size_t>(c.group_size);
  need(stream, static_cast<std::size_t>(c.groups) * t, TestKind::kMaxOfT);
  std::vector<double> observed(static_cast<std::size_t>(c.bins), 0.0);
  std::size_t pos = 0;
  for (int g = 0; g < c.groups; ++g) {
    double m = 0.0;
    for (std::size_t j = 0; j < t; ++j) m = std::max(m, stream[pos++]);
    // max^t is uniform on [0, 1) for independent uniforms.
    observed[digit(std::pow(m, c.group_size), static_cast<std::uint32_t>(c.bins))] += 1;
  }
  std::vector<double> expected(observed.size(), static_cast<double>(c.groups) / c.bins);
  const ChiSquare chi = chi_square_test(observed, expected);
  return finish(TestKind::kMaxOfT,
                params({{"n", c.groups}, {"t", c.group_size}, {"d", c.bins}}), chi.statistic,
                chi.p_value);
}

TestResult random_walk(std::span<const double> stream, const BatteryConfig::RandomWalk& c) {
  const auto len = static_cast<std::size_t>(c.length);
  need(stream, static_cast<std::size_t>(c.walks) * len, TestKind::kRandomWalk);
  std::vector<double> observed(len + 1, 0.0);
  std::size_t pos = 0;
  for (int w = 0; w < c.walks; ++w) {
    std::size_t ups = 0;
    for (std::size_t j = 0; j < len; ++j) ups += stream[pos++] >= 0.5 ? 1 : 0;
    observed[ups] += 1;
  }
  // Number of up-steps is Binomial(length, 1/2); final position = 2 ups - length.
  std::vector<double> expected(len + 1);
  for (std::size_t k = 0; k <= len; ++k) {
    const double log_binom = std::lgamma(c.length + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                             std::lgamma(static_cast<double>(len - k) + 1.0);
    expected[k] = c.walks * std::exp(log_binom - c.length * std::log(2.0));
  }
  const ChiSquare chi = chi_square_test(observed, expected);
  return finish(TestKind::kRandomWalk, params({{"n", c.walks}, {"L", c.length}}), chi.statistic,
                chi.p_value);
}

}  // namespace

void BatteryConfig::validate() const {
  const auto& b = birthday_spacings;
  require(b.replicates >= 1 && b.points >= 2 && b.dimensions >= 1 && b.bits_per_coordinate >= 1 &&
              b.dimensions * b.bits_per_coordinate <= 48,
          "birthday_spacings");
  const auto& co = collision;
  require(co.balls >= 1 && co.dimensions >= 1 && co.bits_per_coordinate >= 1 &&
              co.dimensions * co.bits_per_coordinate <= 30,
          "collision");
  require(gap.gaps >= 1 && 0.0 <= gap.alpha && gap.alpha < gap.beta && gap.beta <= 1.0 &&
              gap.max_gap >= 1 && gap.max_values >= 1,
          "gap");
  require(simp_poker.hands >= 1 && simp_poker.hand_size >= 2 && simp_poker.alphabet >= 2,
          "simp_poker");
  require(coupon_collector.segments >= 1 && coupon_collector.alphabet >= 2 &&
              coupon_collector.max_length > coupon_collector.alphabet &&
              coupon_collector.max_values >= 1,
          "coupon_collector");
  require(max_of_t.groups >= 1 && max_of_t.group_size >= 1 && max_of_t.bins >= 2, "max_of_t");
  require(random_walk.walks >= 1 && random_walk.length >= 2, "random_walk");
}

namespace {

template <typename T>
void read_field(const nlohmann::json& obj, const char* key, T& field) {
  if (obj.contains(key)) field = obj.at(key).get<T>();
}

}  // namespace

BatteryConfig parse_battery_config(std::istream& in) {
  BatteryConfig c;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("battery config is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("version") && j.at("version").get<int>() != BatteryConfig::kVersion) {
      throw std::invalid_argument("unsupported battery config version");
    }
    if (j.contains("birthday_spacings")) {
      const auto& o = j.at("birthday_spacings");
      read_field(o, "replicates", c.birthday_spacings.replicates);
      read_field(o, "points", c.birthday_spacings.points);
      read_field(o, "dimensions", c.birthday_spacings.dimensions);
      read_field(o, "bits_per_coordinate", c.birthday_spacings.bits_per_coordinate);
    }
    if (j.contains("collision")) {
      const auto& o = j.at("collision");
      read_field(o, "balls", c.collision.balls);
      read_field(o, "dimensions", c.collision.dimensions);
      read_field(o, "bits_per_coordinate", c.collision.bits_per_coordinate);
    }
    if (j.contains("gap")) {
      const auto& o = j.at("gap");
      read_field(o, "gaps", c.gap.gaps);
      read_field(o, "alpha", c.gap.alpha);
      read_field(o, "beta", c.gap.beta);
      read_field(o, "max_gap", c.gap.max_gap);
      read_field(o, "max_values", c.gap.max_values);
    }
    if (j.contains("simp_poker")) {
      const auto& o = j.at("simp_poker");
      read_field(o, "hands", c.simp_poker.hands);
      read_field(o, "hand_size", c.simp_poker.hand_size);
      read_field(o, "alphabet", c.simp_poker.alphabet);
    }
    if (j.contains("coupon_collector")) {
      const auto& o = j.at("coupon_collector");
      read_field(o, "segments", c.coupon_collector.segments);
      read_field(o, "alphabet", c.coupon_collector.alphabet);
      read_field(o, "max_length", c.coupon_collector.max_length);
      read_field(o, "max_values", c.coupon_collector.max_values);
    }
    if (j.contains("max_of_t")) {
      const auto& o = j.at("max_of_t");
      read_field(o, "groups", c.max_of_t.groups);
      read_field(o, "group_size", c.max_of_t.group_size);
      read_field(o, "bins", c.max_of_t.bins);
    }
    if (j.contains("random_walk")) {
      const auto& o = j.at("random_walk");
      read_field(o, "walks", c.random_walk.walks);
      read_field(o, "length", c.random_walk.length);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad battery config field: ") + e.what());
  }
  c.validate();
  return c;
}

BatteryConfig read_battery_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return parse_battery_config(in);
}

std::string format_battery_config(const BatteryConfig& c) {
  nlohmann::ordered_json j;
  j["version"] = BatteryConfig::kVersion;
  j["birthday_spacings"] = {{"replicates", c.birthday_spacings.replicates},
                            {"points", c.birthday_spacings.points},
                            {"dimensions", c.birthday_spacings.dimensions},
                            {"bits_per_coordinate", c.birthday_spacings.bits_per_coordinate}};
  j["collision"] = {{"balls", c.collision.balls},
                    {"dimensions", c.collision.dimensions},
                    {"bits_per_coordinate", c.collision.bits_per_coordinate}};
  j["gap"] = {{"gaps", c.gap.gaps},       {"alpha", c.gap.alpha},
              {"beta", c.gap.beta},       {"max_gap", c.gap.max_gap},
              {"max_values", c.gap.max_values}};
  j["simp_poker"] = {{"hands", c.simp_poker.hands},
                     {"hand_size", c.simp_poker.hand_size},
                     {"alphabet", c.simp_poker.alphabet}};
  j["coupon_collector"] = {{"segments", c.coupon_collector.segments},
                           {"alphabet", c.coupon_collector.alphabet},
                           {"max_length", c.coupon_collector.max_length},
                           {"max_values", c.coupon_collector.max_values}};
  j["max_of_t"] = {{"groups", c.max_of_t.groups},
                   {"group_size", c.max_of_t.group_size},
                   {"bins", c.max_of_t.bins}};
  j["random_walk"] = {{"walks", c.random_walk.walks}, {"length", c.random_walk.length}};
  return j.dump(2) + "\n";
}

std::size_t stream_budget(TestKind kind, const BatteryConfig& c) {
  switch (kind) {
    case TestKind::kBirthdaySpacings:
      return static_cast<std::size_t>(c.birthday_spacings.replicates) *
             static_cast<std::size_t>(c.birthday_spacings.points) *
             static_cast<std::size_t>(c.birthday_spacings.dimensions);
    case TestKind::kCollision:
      return static_cast<std::size_t>(c.collision.balls) *
             static_cast<std::size_t>(c.collision.dimensions);
    case TestKind::kGap: return static_cast<std::size_t>(c.gap.max_values);
    case TestKind::kSimpPoker:
      return static_cast<std::size_t>(c.simp_poker.hands) *
             static_cast<std::size_t>(c.simp_poker.hand_size);
    case TestKind::kCouponCollector: return static_cast<std::size_t>(c.coupon_collector.max_values);
    case TestKind::kMaxOfT:
      return static_cast<std::size_t>(c.max_of_t.groups) *
             static_cast<std::size_t>(c.max_of_t.group_size);
    case TestKind::kRandomWalk:
      return static_cast<std::size_t>(c.random_walk.walks) *
             static_cast<std::size_t>(c.random_walk.length);
  }
  throw std::invalid_argument("unknown test kind");
}

TestResult run_test(TestKind kind, std::span<const double> stream, const BatteryConfig& config) {
  config.validate();
  switch (kind) {
    case TestKind::kBirthdaySpacings: return birthday_spacings(stream, config.birthday_spacings);
    case TestKind::kCollision: return collision(stream, config.collision);
    case TestKind::kGap: return gap(stream, config.gap);
    case TestKind::kSimpPoker: return simp_poker(stream, config.simp_poker);
    case TestKind::kCouponCollector: return coupon_collector(stream, config.coupon_collector);
    case TestKind::kMaxOfT: return max_of_t(stream, config.max_of_t);
    case TestKind::kRandomWalk: return random_walk(stream, config.random_walk);
  }
  throw std::invalid_argument("unknown test kind");
}

std::vector<TestResult> run_battery(const UnitSource& source, const BatteryConfig& config) {
  config.validate();
  std::vector<TestResult> results;
  std::vector<double> buffer;
  for (TestKind kind : kBatteryOrder) {
    buffer.resize(stream_budget(kind, config));
    for (double& u : buffer) u = source();
    try {
      results.push_back(run_test(kind, buffer, config));
    } catch (const InsufficientStream& e) {
      // The budget of the event-driven tests is many times their expected
      // consumption; running dry is itself decisive evidence of bias.
      if (kind != TestKind::kGap && kind != TestKind::kCouponCollector) throw;
      results.push_back(TestResult{test_name(kind), std::string("budget exhausted: ") + e.what(),
                                   0.0, 0.0, false});
    }
  }
  return results;
}

std::vector<TestResult> run_battery(GeneratorState& gen, const BatteryConfig& config) {
  return run_battery([&gen] { return gen.next_unit(); }, config);
}

bool all_pass(const std::vector<TestResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const TestResult& r) { return r.pass; });
}

std::string format_results(const std::vector<TestResult>& results) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "test" << std::right << std::setw(16) << "statistic"
      << std::setw(14) << "p-value" << "  verdict\n";
  for (const TestResult& r : results) {
    out << std::left << std::setw(18) << r.name << std::right << std::setw(16) << std::fixed
        << std::setprecision(4) << r.statistic << std::setw(14) << std::scientific
        << std::setprecision(4) << r.p_value << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

}  // namespace mcpnet
