#include "mcpnet/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcpnet {

StateMap::StateMap(int width, std::vector<std::uint32_t> table)
    : width_(width), table_(std::move(table)) {
  check_width(width);
  if (table_.size() != (std::size_t{1} << width)) {
    throw std::invalid_argument("state map table must have 2^width entries");
  }
  const std::uint32_t mask = State::full_mask(width);
  for (std::uint32_t v : table_) {
    if ((v & ~mask) != 0) throw std::invalid_argument("state map entry out of range");
  }
}

StateMap StateMap::tabulate(int width, const std::function<State(const State&)>& f) {
  check_width(width);
  const std::uint32_t count = std::uint32_t{1} << width;
  std::vector<std::uint32_t> table(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    const State y = f(State(width, k));
    if (y.width() != width) throw std::invalid_argument("map changes state width");
    table[k] = y.code();
  }
  return StateMap(width, std::move(table));
}

StateMap StateMap::from_network(const Network& net) {
  return tabulate(net.width(), [&net](const State& x) { return eval_network(net, x); });
}

StateMap StateMap::phi_map(int n) { return tabulate(n, [](const State& x) { return phi(x); }); }

StateMap StateMap::identity(int n) {
  return tabulate(n, [](const State& x) { return x; });
}

State iterate(const StateMap& f, const State& s, std::uint64_t t) {
  if (s.width() != f.width()) throw std::invalid_argument("state width differs from map width");
  std::uint32_t code = s.code();
  for (std::uint64_t i = 0; i < t; ++i) code = f(code);
  return State(f.width(), code);
}

CycleReport cycle_structure(const StateMap& f) {
  const std::uint32_t count = f.size();
  // 0 = unvisited, otherwise 1 + the start code of the walk that claimed it.
  std::vector<std::uint32_t> owner(count, 0);
  std::vector<std::uint32_t> walk;
  CycleReport report;
  std::uint64_t on_cycles = 0;

  for (std::uint32_t start = 0; start < count; ++start) {
    if (owner[start] != 0) continue;
    const std::uint32_t tag = start + 1;
    walk.clear();
    std::uint32_t s = start;
    while (owner[s] == 0) {
      owner[s] = tag;
      walk.push_back(s);
      s = f(s);
    }
    if (owner[s] != tag) continue;  // ran into an earlier walk's tree or cycle
    const auto pos = std::find(walk.begin(), walk.end(), s);
    const auto len = static_cast<std::uint64_t>(walk.end() - pos);
    report.cycle_lengths.push_back(len);
    on_cycles += len;
  }
  std::sort(report.cycle_lengths.begin(), report.cycle_lengths.end());
  report.transient_state_count = count - on_cycles;
  report.is_permutation = report.transient_state_count == 0;
  report.is_full_period = report.cycle_lengths.size() == 1 && report.cycle_lengths[0] == count;
  return report;
}

std::uint64_t period(const StateMap& f) { return cycle_structure(f).cycle_lengths.front(); }

RhoShape rho_shape(const StateMap& f, const State& s) {
  if (s.width() != f.width()) throw std::invalid_argument("state width differs from map width");
  std::uint64_t power = 1;
  std::uint64_t lambda = 1;
  std::uint32_t tortoise = s.code();
  std::uint32_t hare = f(tortoise);
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = f(hare);
    ++lambda;
  }
  std::uint64_t mu = 0;
  tortoise = s.code();
  hare = s.code();
  for (std::uint64_t i = 0; i < lambda; ++i) hare = f(hare);
  while (tortoise != hare) {
    tortoise = f(tortoise);
    hare = f(hare);
    ++mu;
  }
  return RhoShape{mu, lambda};
}

Trajectory trajectory(const StateMap& f, const State& s, std::uint64_t count) {
  if (s.width() != f.width()) throw std::invalid_argument("state width differs from map width");
  if (count == 0) throw std::invalid_argument("trajectory length must be positive");
  std::vector<State> states;
  states.reserve(count);
  std::uint32_t code = s.code();
  for (std::uint64_t i = 0; i < count; ++i) {
    states.emplace_back(f.width(), code);
    code = f(code);
  }
  return Trajectory(f.width(), std::move(states));
}

}  // namespace mcpnet
