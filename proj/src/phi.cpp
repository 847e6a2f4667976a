#include "mcpnet/phi.hpp"

#include <stdexcept>

namespace mcpnet {

Trajectory::Trajectory(int width, std::vector<State> states)
    : width_(width), states_(std::move(states)) {
  check_width(width);
  if (states_.empty()) throw std::invalid_argument("trajectory must be non-empty");
  for (const State& s : states_) {
    if (s.width() != width) throw std::invalid_argument("trajectory states differ in width");
  }
}

std::string Trajectory::to_text() const {
  std::string out;
  out.reserve(states_.size() * static_cast<std::size_t>(width_ + 1));
  for (const State& s : states_) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

State phi(const State& x) {
  const int n = x.width();
  const int m = x.alternating_prefix_length();
  const std::uint32_t prefix = State::full_mask(n) & ~State::full_mask(n - m);
  const std::uint32_t fill = x.bit(m) ? 0u : prefix;
  return State(n, (x.code() & ~prefix) | fill);
}

State phi_reference(const State& x) {
  const int n = x.width();
  int m = 1;
  while (m < n && x.bit(m + 1) != x.bit(m)) ++m;
  State y = x;
  for (int i = 1; i <= m; ++i) y = y.with_bit(i, 1 - x.bit(m));
  return y;
}

Trajectory phi_trajectory(int n) {
  check_width(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<State> states;
  states.reserve(count);
  State s = State::zeros(n);
  for (std::size_t t = 0; t < count; ++t) {
    states.push_back(s);
    s = phi(s);
  }
  return Trajectory(n, std::move(states));
}

namespace {

bool is_phi_trajectory(const Trajectory& t) {
  const int n = t.width();
  if (t.size() != (std::size_t{1} << n)) return false;
  if (t[0] != State::zeros(n)) return false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (phi(t[i]) != t[i + 1]) return false;
  }
  return true;
}

}  // namespace

Trajectory double_trajectory(const Trajectory& t) {
  if (t.width() >= kMaxWidth) {
    throw std::invalid_argument("cannot double a trajectory of width " +
                                std::to_string(t.width()));
  }
  if (!is_phi_trajectory(t)) {
    throw std::invalid_argument("input is not the phi trajectory from all-zeros");
  }
  const int n = t.width() + 1;
  std::vector<State> states;
  states.reserve(2 * t.size());
  for (const State& s : t.states()) states.emplace_back(n, s.code() << 1);
  for (std::size_t i = 0; i < t.size(); ++i) states.push_back(states[i].complement());
  return Trajectory(n, std::move(states));
}

}  // namespace mcpnet
