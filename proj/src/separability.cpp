#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mcpnet/threshold.hpp"
#include "rational.hpp"

namespace mcpnet {

using detail::Rational;

PartialTruthTable::PartialTruthTable(int width) : width_(width) {
  if (width < 1 || width > kMaxSeparabilityWidth) {
    throw std::invalid_argument("partial truth tables support widths 1.." +
                                std::to_string(kMaxSeparabilityWidth));
  }
}

PartialTruthTable PartialTruthTable::full(int width, std::uint32_t table) {
  PartialTruthTable t(width);
  const std::uint32_t all = width == 5 ? ~std::uint32_t{0} : (std::uint32_t{1} << (1u << width)) - 1u;
  if ((table & ~all) != 0) throw std::invalid_argument("table has bits beyond 2^width entries");
  t.defined_ = all;
  t.values_ = table;
  return t;
}

std::size_t PartialTruthTable::size() const { return static_cast<std::size_t>(std::popcount(defined_)); }

void PartialTruthTable::assign(const State& x, int value) {
  if (x.width() != width_) throw std::invalid_argument("state width differs from table width");
  assign(x.code(), value);
}

void PartialTruthTable::assign(std::uint32_t code, int value) {
  if (code >= (std::uint32_t{1} << width_)) throw std::out_of_range("state code out of range");
  const std::uint32_t m = std::uint32_t{1} << code;
  const std::uint32_t v = value ? m : 0u;
  if ((defined_ & m) != 0 && (values_ & m) != v) {
    throw std::invalid_argument("contradictory assignment for state " +
                                State(width_, code).to_string());
  }
  defined_ |= m;
  values_ = (values_ & ~m) | v;
}

std::optional<int> PartialTruthTable::at(std::uint32_t code) const {
  const std::uint32_t m = std::uint32_t{1} << code;
  if ((defined_ & m) == 0) return std::nullopt;
  return (values_ & m) ? 1 : 0;
}

bool consistent(const ThresholdNeuron& f, const PartialTruthTable& t) {
  if (f.width() != t.width()) return false;
  const std::uint32_t count = std::uint32_t{1} << t.width();
  for (std::uint32_t k = 0; k < count; ++k) {
    const std::optional<int> v = t.at(k);
    if (v && eval_neuron(f, State(t.width(), k)) != *v) return false;
  }
  return true;
}

namespace {

// A threshold function is monotone in every variable, increasing or
// decreasing according to the sign of its weight. Any pair of assigned
// points showing both directions for one variable rules out separability.
bool violates_unateness(const PartialTruthTable& t) {
  const int n = t.width();
  const std::uint32_t count = std::uint32_t{1} << n;
  for (int p = 0; p < n; ++p) {
    const std::uint32_t bit = std::uint32_t{1} << p;
    bool up = false;
    bool down = false;
    for (std::uint32_t k = 0; k < count; ++k) {
      if (k & bit) continue;
      const std::optional<int> lo = t.at(k);
      const std::optional<int> hi = t.at(k | bit);
      if (!lo || !hi || *lo == *hi) continue;
      (*hi > *lo ? up : down) = true;
    }
    if (up && down) return true;
  }
  return false;
}

// Phase-one simplex with Bland's rule over exact rationals. Decides whether
// some v = (w_1..w_n, theta) satisfies L(x) = w.x - theta >= 0 on the ones
// and L(x) <= -1 on the zeros, and returns such a v.
class SeparabilityLp {
 public:
  explicit SeparabilityLp(const PartialTruthTable& t) : n_(t.width()), dim_(n_ + 1) {
    const std::uint32_t count = std::uint32_t{1} << n_;
    for (std::uint32_t k = 0; k < count; ++k) {
      if (const std::optional<int> v = t.at(k)) points_.push_back({k, *v});
    }
    rows_ = static_cast<int>(points_.size());
    for (const Point& p : points_) artificials_ += p.value == 0 ? 1 : 0;
    cols_ = 2 * dim_ + rows_ + artificials_;
    tableau_.assign(static_cast<std::size_t>(rows_ * (cols_ + 1)), Rational{});
    basis_.assign(static_cast<std::size_t>(rows_), 0);
    cost_.assign(static_cast<std::size_t>(cols_ + 1), Rational{});

    int art = 2 * dim_ + rows_;
    for (int r = 0; r < rows_; ++r) {
      const Point& p = points_[static_cast<std::size_t>(r)];
      // Linear form coefficients g: x bits then -1 for theta.
      std::vector<std::int64_t> g(static_cast<std::size_t>(dim_));
      for (int j = 0; j < n_; ++j) g[static_cast<std::size_t>(j)] = (p.code >> (n_ - 1 - j)) & 1u;
      g[static_cast<std::size_t>(n_)] = -1;
      // ones: -g.v + s = 0; zeros: g.v <= -1, negated to -g.v - s + a = 1.
      for (int j = 0; j < dim_; ++j) {
        const std::int64_t c = -g[static_cast<std::size_t>(j)];
        cell(r, j) = c;
        cell(r, dim_ + j) = -c;
      }
      if (p.value == 1) {
        cell(r, 2 * dim_ + r) = 1;
        cell(r, cols_) = 0;
        basis_[static_cast<std::size_t>(r)] = 2 * dim_ + r;
      } else {
        cell(r, 2 * dim_ + r) = -1;
        cell(r, art) = 1;
        cell(r, cols_) = 1;
        basis_[static_cast<std::size_t>(r)] = art;
        ++art;
      }
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    for (int r = 0; r < rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < 2 * dim_ + rows_) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (c >= 2 * dim_ + rows_ && c < cols_) continue;
        cost_[static_cast<std::size_t>(c)] = cost_[static_cast<std::size_t>(c)] - cell(r, c);
      }
    }
  }

  std::optional<std::vector<Rational>> solve() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (cost_[static_cast<std::size_t>(c)].sign() < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows_; ++r) {
        const Rational& a = cell(r, enter);
        if (a.sign() <= 0) continue;
        const Rational ratio = cell(r, cols_) / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("phase-one objective unbounded");
      pivot(leave, enter);
    }
    // Objective value is -cost_[cols_].
    if (!cost_[static_cast<std::size_t>(cols_)].is_zero()) return std::nullopt;
    std::vector<Rational> v(static_cast<std::size_t>(dim_));
    for (int r = 0; r < rows_; ++r) {
      const int b = basis_[static_cast<std::size_t>(r)];
      if (b < dim_) {
        v[static_cast<std::size_t>(b)] = v[static_cast<std::size_t>(b)] + cell(r, cols_);
      } else if (b < 2 * dim_) {
        v[static_cast<std::size_t>(b - dim_)] = v[static_cast<std::size_t>(b - dim_)] - cell(r, cols_);
      }
    }
    return v;
  }

 private:
  struct Point {
    std::uint32_t code;
    int value;
  };

  Rational& cell(int r, int c) {
    return tableau_[static_cast<std::size_t>(r * (cols_ + 1) + c)];
  }

  void pivot(int pr, int pc) {
    const Rational inv = Rational(1) / cell(pr, pc);
    for (int c = 0; c <= cols_; ++c) cell(pr, c) = cell(pr, c) * inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const Rational f = cell(r, pc);
      if (f.is_zero()) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (!cell(pr, c).is_zero()) cell(r, c) = cell(r, c) - f * cell(pr, c);
      }
    }
    const Rational f = cost_[static_cast<std::size_t>(pc)];
    if (!f.is_zero()) {
      for (int c = 0; c <= cols_; ++c) {
        cost_[static_cast<std::size_t>(c)] = cost_[static_cast<std::size_t>(c)] - f * cell(pr, c);
      }
    }
    basis_[static_cast<std::size_t>(pr)] = pc;
  }

  int n_;
  int dim_;
  int rows_ = 0;
  int cols_ = 0;
  int artificials_ = 0;
  std::vector<Point> points_;
  std::vector<Rational> tableau_;
  std::vector<int> basis_;
  std::vector<Rational> cost_;
};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const Rational r = Rational(a) * Rational(b / std::gcd(a, b));
  return r.num();
}

}  // namespace

std::optional<ThresholdNeuron> is_threshold(const PartialTruthTable& t) {
  if (violates_unateness(t)) return std::nullopt;
  SeparabilityLp lp(t);
  const std::optional<std::vector<Rational>> v = lp.solve();
  if (!v) return std::nullopt;

  std::int64_t scale = 1;
  for (const Rational& r : *v) scale = lcm_checked(scale, r.den());
  ThresholdNeuron f;
  const int n = t.width();
  for (int j = 0; j < n; ++j) f.weights.push_back(((*v)[static_cast<std::size_t>(j)] * scale).num());
  f.theta = ((*v)[static_cast<std::size_t>(n)] * scale).num();
  if (!consistent(f, t)) throw std::logic_error("separability witness failed re-evaluation");
  return f;
}

std::optional<ThresholdNeuron> is_threshold_bounded(const PartialTruthTable& t, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const int n = t.width();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), -bound);
  for (;;) {
    bool any_one = false;
    bool any_zero = false;
    std::int64_t min_one = 0;
    std::int64_t max_zero = 0;
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::optional<int> v = t.at(k);
      if (!v) continue;
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) {
        if ((k >> (n - 1 - j)) & 1u) s += w[static_cast<std::size_t>(j)];
      }
      if (*v) {
        min_one = any_one ? std::min(min_one, s) : s;
        any_one = true;
      } else {
        max_zero = any_zero ? std::max(max_zero, s) : s;
        any_zero = true;
      }
    }
    if (!any_one || !any_zero || min_one > max_zero) {
      const std::int64_t theta = any_one ? min_one : max_zero + 1;
      return ThresholdNeuron{w, theta};
    }
    int j = 0;
    while (j < n && w[static_cast<std::size_t>(j)] == bound) {
      w[static_cast<std::size_t>(j)] = -bound;
      ++j;
    }
    if (j == n) return std::nullopt;
    ++w[static_cast<std::size_t>(j)];
  }
}

const std::vector<std::uint32_t>& threshold_functions(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("threshold_functions supports widths 1..4");
  static std::array<std::vector<std::uint32_t>, 5> cache;
  static std::array<std::once_flag, 5> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] {
    std::vector<std::uint32_t>& out = cache[static_cast<std::size_t>(n)];
    const std::uint64_t tables = std::uint64_t{1} << (1u << n);
    for (std::uint64_t f = 0; f < tables; ++f) {
      const auto table = static_cast<std::uint32_t>(f);
      if (is_threshold(PartialTruthTable::full(n, table))) out.push_back(table);
    }
  });
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace mcpnet
