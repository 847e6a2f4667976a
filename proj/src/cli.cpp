#include "mcpnet/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "mcpnet/dynamics.hpp"
#include "mcpnet/enumeration.hpp"
#include "mcpnet/phi.hpp"
#include "mcpnet/randgen.hpp"
#include "mcpnet/rank.hpp"
#include "mcpnet/stattests.hpp"
#include "mcpnet/threshold.hpp"

namespace mcpnet {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Raised for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<int> n;
  std::optional<int> phi_n;
  std::string net;
  std::string start;
  std::string seed;
  std::string config;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> count;
  std::string format = "f64";
  bool classify = false;
  bool reference = false;
  bool lsb_first = false;
  std::vector<std::string> positional;
};

// The map named by --phi N or --net FILE (exactly one of them).
StateMap select_map(const Flags& f) {
  if (f.phi_n && !f.net.empty()) throw UsageError("give either --phi or --net, not both");
  if (f.phi_n) return StateMap::phi_map(*f.phi_n);
  if (!f.net.empty()) return StateMap::from_network(read_network_file(f.net));
  throw UsageError("one of --phi N or --net FILE is required");
}

// The generator map: --net FILE if present, else phi on --n bits.
StateMap generator_map(const Flags& f) {
  if (!f.net.empty()) {
    StateMap map = StateMap::from_network(read_network_file(f.net));
    if (f.n && *f.n != map.width()) throw UsageError("--n does not match the network width");
    return map;
  }
  if (!f.n) throw UsageError("--n N or --net FILE is required");
  return StateMap::phi_map(*f.n);
}

State parse_state_for(const std::string& bits, int width, const char* flag) {
  if (bits.empty()) return State::zeros(width);
  State s = State::parse(bits);
  if (s.width() != width) throw UsageError(std::string(flag) + " has the wrong width");
  return s;
}

int require_n(const Flags& f) {
  if (!f.n) throw UsageError("--n N is required");
  return *f.n;
}

std::string join_states(const std::vector<std::uint32_t>& codes, int width) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ' ';
    out += State(width, codes[i]).to_string();
  }
  return out;
}

int cmd_trajectory(const Flags& f, std::ostream& out) {
  const StateMap map = select_map(f);
  const State start = parse_state_for(f.start, map.width(), "--start");
  const std::uint64_t steps = f.steps.value_or(map.size());
  if (steps == 0) throw UsageError("--steps must be positive");
  out << trajectory(map, start, steps).to_text();
  return kExitOk;
}

int cmd_doubling(const Flags& f, std::ostream& out) {
  const int n = require_n(f);
  if (n >= kMaxWidth) throw UsageError("--n must be below " + std::to_string(kMaxWidth));
  out << double_trajectory(phi_trajectory(n)).to_text();
  return kExitOk;
}

int cmd_rank(const Flags& f, std::ostream& out) {
  if (!f.positional.empty()) {
    for (const std::string& bits : f.positional) {
      const State x = State::parse(bits);
      if (f.n && *f.n != x.width()) throw UsageError("state width differs from --n");
      out << rank(x).value << '\n';
    }
    return kExitOk;
  }
  const int n = require_n(f);
  for (std::uint32_t k = 0; k <= State::full_mask(n); ++k) {
    const State x(n, k);
    out << x.to_string() << ' ' << rank(x).value << '\n';
  }
  return kExitOk;
}

int cmd_unrank(const Flags& f, std::ostream& out) {
  const int n = require_n(f);
  if (f.positional.empty()) {
    for (std::uint32_t k = 0; k <= State::full_mask(n); ++k) {
      out << k << ' ' << unrank(RankCode::make(n, k)).to_string() << '\n';
    }
    return kExitOk;
  }
  for (const std::string& value : f.positional) {
    std::size_t used = 0;
    std::uint64_t k = 0;
    try {
      k = std::stoull(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty() || value[0] == '-') {
      throw UsageError("not a non-negative integer: " + value);
    }
    out << unrank(RankCode::make(n, k)).to_string() << '\n';
  }
  return kExitOk;
}

int cmd_weights(const Flags& f, std::ostream& out) {
  out << format_network(build_canonical_network(require_n(f)));
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  bool ok = false;
  if (!f.net.empty()) {
    const Network net = read_network_file(f.net);
    if (f.n && *f.n != net.width()) throw UsageError("--n does not match the network width");
    ok = realizes_phi(net);
  } else {
    const int n = require_n(f);
    if (n > 20) throw UsageError("verify supports --n up to 20");
    ok = verify_realization(n);
  }
  out << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int cmd_period(const Flags& f, std::ostream& out) {
  const StateMap map = select_map(f);
  const CycleReport report = cycle_structure(map);
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (std::uint64_t len : report.cycle_lengths) ++multiplicity[len];
  out << "period " << report.cycle_lengths.front() << '\n';
  out << "cycles";
  for (const auto& [len, count] : multiplicity) out << ' ' << len << 'x' << count;
  out << '\n';
  out << "transient " << report.transient_state_count << '\n';
  out << "permutation " << (report.is_permutation ? "yes" : "no") << '\n';
  out << "full_period " << (report.is_full_period ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  const int n = require_n(f);
  if (n < 2 || n > 4) throw UsageError("enumerate supports --n 2..4");
  const std::vector<EnumeratedNetwork> nets = enumerate_full_period(n);
  if (!f.classify) {
    for (const EnumeratedNetwork& e : nets) out << join_states(cycle_from_zero(e.map), n) << '\n';
    return kExitOk;
  }
  std::vector<StateMap> maps;
  maps.reserve(nets.size());
  for (const EnumeratedNetwork& e : nets) maps.push_back(e.map);
  for (const IsoClass& cls : classify(maps)) {
    const std::vector<std::uint32_t> key(cls.canonical_key.begin(), cls.canonical_key.end());
    out << join_states(key, n) << ' ' << cls.orbit_size << '\n';
  }
  return kExitOk;
}

GeneratorState make_generator(const Flags& f) {
  auto map = std::make_shared<const StateMap>(generator_map(f));
  const State seed = parse_state_for(f.seed, map->width(), "--seed");
  return GeneratorState(map, seed, f.lsb_first ? BitOrder::kLsbFirst : BitOrder::kMsbFirst);
}

int cmd_prng(const Flags& f, std::ostream& out, std::ostream& err) {
  GeneratorState gen = make_generator(f);
  const int n = gen.width();
  const std::uint64_t count = f.count.value_or(std::uint64_t{1} << n);
  if (f.format == "u32") {
    for (std::uint64_t i = 0; i < count; ++i) out << gen.next_u32() << '\n';
  } else if (f.format == "f64") {
    // k / 2^n has exactly n decimal places.
    out << std::fixed << std::setprecision(n);
    for (std::uint64_t i = 0; i < count; ++i) out << gen.next_unit() << '\n';
    out.unsetf(std::ios::floatfield);
  } else if (f.format == "bits") {
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint32_t w = gen.next_u32();
      const char bytes[4] = {static_cast<char>(w >> 24), static_cast<char>(w >> 16),
                             static_cast<char>(w >> 8), static_cast<char>(w)};
      out.write(bytes, 4);
    }
  } else {
    err << "unknown --format " << f.format << " (expected u32, f64 or bits)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_test(const Flags& f, std::ostream& out) {
  const BatteryConfig config = f.config.empty() ? BatteryConfig{} : read_battery_config(f.config);
  std::vector<TestResult> results;
  if (f.reference) {
    ReferenceGenerator ref;
    results = run_battery([&ref] { return ref.next_unit(); }, config);
  } else {
    GeneratorState gen = make_generator(f);
    results = run_battery(gen, config);
  }
  out << format_results(results);
  const bool ok = all_pass(results);
  out << "overall " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold networks of maximal period: construction, verification, enumeration "
               "and generator testing"};
  app.require_subcommand(1);
  Flags f;

  auto add_n = [&f](CLI::App* sub, const std::string& what) {
    return sub->add_option("--n", f.n, what)->check(CLI::Range(1, kMaxWidth));
  };
  auto add_phi = [&f](CLI::App* sub) {
    return sub->add_option("--phi", f.phi_n, "Use the alternating-prefix map on N bits")
        ->check(CLI::Range(1, kMaxWidth));
  };
  auto add_net = [&f](CLI::App* sub) {
    return sub->add_option("--net", f.net, "Network file (width line, then weights and theta per neuron)");
  };

  auto* traj = app.add_subcommand(
      "trajectory", "Iterates of the alternating-prefix map or of a network file, one state per line");
  add_phi(traj);
  add_net(traj);
  traj->add_option("--start", f.start, "Initial state as bits x1..xn (default all zeros)");
  traj->add_option("--steps", f.steps, "Number of states to print (default 2^n)");

  auto* dbl = app.add_subcommand(
      "doubling", "Build the (n+1)-bit trajectory from the n-bit one: append 0, then the complements");
  add_n(dbl, "Width of the input trajectory");

  auto* rk = app.add_subcommand(
      "rank", "Rank bijection: c_j = |x_j - x_{j+1}|, c_n = x_n, rank = sum c_j 2^(j-1)");
  add_n(rk, "Width; without states prints the full table");
  rk->add_option("states", f.positional, "States as bit strings");

  auto* urk = app.add_subcommand("unrank", "Inverse of the rank bijection");
  add_n(urk, "Width")->required();
  urk->add_option("values", f.positional, "Ranks to invert; without values prints the full table");

  auto* wts = app.add_subcommand(
      "weights", "Integer weights of the recursive threshold network realizing the alternating-prefix map");
  add_n(wts, "Width")->required();

  auto* ver = app.add_subcommand(
      "verify", "Check exhaustively that the recursive network (or --net) realizes the alternating-prefix map");
  add_n(ver, "Width");
  add_net(ver);

  auto* per = app.add_subcommand("period", "Period (shortest cycle) and full cycle structure of a map");
  add_phi(per);
  add_net(per);

  auto* en = app.add_subcommand(
      "enumerate", "All full-period threshold networks on n <= 4 neurons, optionally grouped into "
                   "isomorphism classes under coordinate permutations and bit flips");
  add_n(en, "Width (2..4)")->required();
  en->add_flag("--classify", f.classify, "Print one line per class: canonical trajectory and orbit size");

  auto* prng = app.add_subcommand(
      "prng", "Generator reading each state of a full-period network as an n-bit integer (x1 most significant)");
  add_n(prng, "Width of the alternating-prefix map when no --net is given");
  add_net(prng);
  prng->add_option("--count", f.count, "Number of values (default 2^n)");
  prng->add_option("--format", f.format,
                   "u32: k << (32-n); f64: k / 2^n; bits: big-endian bytes of the u32 words");
  prng->add_option("--seed", f.seed, "Initial state as bits (default all zeros)");
  prng->add_flag("--lsb-first", f.lsb_first, "Read x_n as the most significant bit instead");

  auto* tst = app.add_subcommand(
      "test", "Statistical battery (birthday spacings, collision, gap, poker, coupon collector, "
              "max-of-t, random walk); a test passes when 0.001 <= p <= 0.999");
  add_n(tst, "Width of the alternating-prefix map when no --net is given");
  add_net(tst);
  tst->add_option("--config", f.config, "JSON battery configuration");
  tst->add_option("--seed", f.seed, "Initial state as bits (default all zeros)");
  tst->add_flag("--reference", f.reference, "Run the battery on the Mersenne Twister calibration stream");
  tst->add_flag("--lsb-first", f.lsb_first, "Read x_n as the most significant bit instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*traj) return cmd_trajectory(f, out);
    if (*dbl) return cmd_doubling(f, out);
    if (*rk) return cmd_rank(f, out);
    if (*urk) return cmd_unrank(f, out);
    if (*wts) return cmd_weights(f, out);
    if (*ver) return cmd_verify(f, out);
    if (*per) return cmd_period(f, out);
    if (*en) return cmd_enumerate(f, out);
    if (*prng) return cmd_prng(f, out, err);
    if (*tst) return cmd_test(f, out);
  } catch (const InsufficientStream& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mcpnet
