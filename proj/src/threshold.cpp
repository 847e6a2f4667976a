#include "mcpnet/threshold.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mcpnet/phi.hpp"

namespace mcpnet {

Network::Network(int width, std::vector<ThresholdNeuron> neurons)
    : width_(width), neurons_(std::move(neurons)) {
  check_width(width);
  if (static_cast<int>(neurons_.size()) != width) {
    throw std::invalid_argument("network of width " + std::to_string(width) + " has " +
                                std::to_string(neurons_.size()) + " neurons");
  }
  for (const ThresholdNeuron& f : neurons_) {
    if (f.width() != width) {
      throw std::invalid_argument("neuron has " + std::to_string(f.width()) +
                                  " weights, expected " + std::to_string(width));
    }
  }
}

int eval_neuron(const ThresholdNeuron& f, const State& x) {
  if (f.width() != x.width()) throw std::invalid_argument("neuron and state widths differ");
  std::int64_t sum = 0;
  for (int j = 1; j <= x.width(); ++j) {
    if (x.bit(j)) sum += f.weights[static_cast<std::size_t>(j - 1)];
  }
  return sum >= f.theta ? 1 : 0;
}

State eval_network(const Network& net, const State& x) {
  if (net.width() != x.width()) throw std::invalid_argument("network and state widths differ");
  const int n = net.width();
  std::uint32_t code = 0;
  for (int i = 1; i <= n; ++i) {
    code = (code << 1) | static_cast<std::uint32_t>(eval_neuron(net.neuron(i), x));
  }
  return State(n, code);
}

Network build_canonical_network(int n) {
  check_width(n);
  using Matrix = std::vector<std::vector<std::int64_t>>;
  // level[k] holds the weights (rows i, columns j, both 0-based) and
  // thresholds for width k + 1.
  std::vector<Matrix> w;
  std::vector<std::vector<std::int64_t>> theta;
  w.push_back({{-1}});
  theta.push_back({0});

  for (int m = 2; m <= n; ++m) {
    const Matrix& prev = w[static_cast<std::size_t>(m - 2)];
    const std::vector<std::int64_t>& prev_theta = theta[static_cast<std::size_t>(m - 2)];
    Matrix cur(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
    std::vector<std::int64_t> cur_theta(static_cast<std::size_t>(m));
    auto at = [](auto& mat, int i, int j) -> auto& {
      return mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    };

    // Last neuron.
    for (int j = 1; j <= m; ++j) {
      if (j == m) {
        at(cur, m, j) = m - 2;
      } else {
        at(cur, m, j) = (j % 2 != m % 2) ? 1 : -1;
      }
    }
    cur_theta[static_cast<std::size_t>(m - 1)] = m / 2;

    // Neuron m - 1.
    for (int j = 1; j <= m - 2; ++j) at(cur, m - 1, j) = at(prev, m - 1, j);
    at(cur, m - 1, m - 1) = at(prev, m - 1, m - 1) + 1;
    at(cur, m - 1, m) = -1;
    cur_theta[static_cast<std::size_t>(m - 2)] = prev_theta[static_cast<std::size_t>(m - 2)];

    // Neurons 1 .. m - 2 combine the two previous levels.
    if (m >= 3) {
      const Matrix& prev2 = w[static_cast<std::size_t>(m - 3)];
      const std::vector<std::int64_t>& prev2_theta = theta[static_cast<std::size_t>(m - 3)];
      for (int i = 1; i <= m - 2; ++i) {
        for (int j = 1; j <= m - 2; ++j) at(cur, i, j) = at(prev, i, j) + at(prev2, i, j);
        at(cur, i, m - 1) = at(prev, i, m - 1);
        at(cur, i, m) = -1;
        cur_theta[static_cast<std::size_t>(i - 1)] = prev_theta[static_cast<std::size_t>(i - 1)] +
                                                     prev2_theta[static_cast<std::size_t>(i - 1)] - 1;
      }
    }
    w.push_back(std::move(cur));
    theta.push_back(std::move(cur_theta));
  }

  const Matrix& top = w.back();
  const std::vector<std::int64_t>& top_theta = theta.back();
  std::vector<ThresholdNeuron> neurons;
  neurons.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    neurons.push_back(ThresholdNeuron{top[static_cast<std::size_t>(i)],
                                      top_theta[static_cast<std::size_t>(i)]});
  }
  return Network(n, std::move(neurons));
}

bool realizes_phi(const Network& net) {
  const int n = net.width();
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t k = 0; k < count; ++k) {
    const State x(n, k);
    if (eval_network(net, x) != phi(x)) return false;
  }
  return true;
}

bool verify_realization(int n) { return realizes_phi(build_canonical_network(n)); }

std::string heaviside_expression(const ThresholdNeuron& f) {
  std::string body;
  for (int j = 1; j <= f.width(); ++j) {
    const std::int64_t c = f.weights[static_cast<std::size_t>(j - 1)];
    if (c == 0) continue;
    if (c < 0) {
      body += '-';
    } else if (!body.empty()) {
      body += '+';
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) body += std::to_string(mag);
    body += "x" + std::to_string(j);
  }
  if (f.theta > 0) {
    body += "-" + std::to_string(f.theta);
  } else if (f.theta < 0) {
    if (!body.empty()) body += '+';
    body += std::to_string(-f.theta);
  }
  if (body.empty()) body = "0";
  return "H(" + body + ")";
}

std::string format_network(const Network& net) {
  std::ostringstream out;
  out << net.width() << '\n';
  for (const ThresholdNeuron& f : net.neurons()) {
    for (std::int64_t w : f.weights) out << w << ' ';
    out << f.theta << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::int64_t> parse_int_line(const std::string& line, int line_no) {
  std::istringstream in(line);
  std::vector<std::int64_t> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": not an integer: '" +
                                  token + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

Network parse_network(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw std::invalid_argument("empty network file");
  const std::vector<std::int64_t> header = parse_int_line(line, line_no);
  if (header.size() != 1 || header[0] < 1 || header[0] > kMaxWidth) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": expected a width in [1, " + std::to_string(kMaxWidth) + "]");
  }
  const int n = static_cast<int>(header[0]);
  std::vector<ThresholdNeuron> neurons;
  for (int i = 0; i < n; ++i) {
    if (!next_line()) {
      throw std::invalid_argument("expected " + std::to_string(n) + " neuron lines, got " +
                                  std::to_string(i));
    }
    std::vector<std::int64_t> row = parse_int_line(line, line_no);
    if (static_cast<int>(row.size()) != n + 1) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(n + 1) + " integers, got " +
                                  std::to_string(row.size()));
    }
    const std::int64_t theta = row.back();
    row.pop_back();
    neurons.push_back(ThresholdNeuron{std::move(row), theta});
  }
  if (next_line()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing content");
  }
  return Network(n, std::move(neurons));
}

Network read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open network file: " + path);
  return parse_network(in);
}

}  // namespace mcpnet
