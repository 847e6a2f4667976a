#include "mcpnet/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mcpnet {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::uint32_t flips)
    : perm_(std::move(perm)), flips_(flips) {
  const int n = width();
  check_width(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm_) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)]) {
      throw std::invalid_argument("coordinate permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
  if ((flips & ~State::full_mask(n)) != 0) throw std::invalid_argument("flip mask too wide");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return SignedPermutation(std::move(perm), 0);
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm.at(static_cast<std::size_t>(i - 1)), perm.at(static_cast<std::size_t>(j - 1)));
  return SignedPermutation(std::move(perm), 0);
}

SignedPermutation SignedPermutation::flip(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("flip coordinate out of range");
  SignedPermutation id = identity(n);
  return SignedPermutation(id.perm(), std::uint32_t{1} << (n - i));
}

std::uint32_t SignedPermutation::apply(std::uint32_t code) const {
  const int n = width();
  std::uint32_t out = 0;
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t bit = (code >> (n - i)) & 1u;
    out |= bit << (n - perm_[static_cast<std::size_t>(i - 1)]);
  }
  return out ^ flips_;
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = width();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i - 1)] - 1)] = i;
  SignedPermutation unflipped(inv, 0);
  return SignedPermutation(std::move(inv), unflipped.apply(flips_));
}

std::vector<SignedPermutation> all_symmetries(int n) {
  check_width(n);
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t b = 0; b <= State::full_mask(n); ++b) out.emplace_back(perm, b);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

StateMap apply_symmetry(const StateMap& f, const SignedPermutation& sigma) {
  if (sigma.width() != f.width()) throw std::invalid_argument("symmetry and map widths differ");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) table[sigma.apply(x)] = sigma.apply(f(x));
  return StateMap(f.width(), std::move(table));
}

std::vector<std::uint32_t> cycle_from_zero(const StateMap& f) {
  std::vector<std::uint32_t> codes;
  codes.reserve(f.size());
  std::uint32_t s = 0;
  do {
    codes.push_back(s);
    s = f(s);
  } while (s != 0 && codes.size() < f.size());
  if (s != 0 || codes.size() != f.size()) throw std::invalid_argument("map is not full-period");
  return codes;
}

CanonicalKey canonical_key(const StateMap& f) {
  if (f.width() > 8) throw std::invalid_argument("canonical keys support widths up to 8");
  const std::vector<std::uint32_t> base = cycle_from_zero(f);
  const std::size_t count = base.size();
  CanonicalKey best;
  CanonicalKey cur(count);
  for (const SignedPermutation& sigma : all_symmetries(f.width())) {
    // The conjugate's trajectory from zero is sigma applied to F's
    // trajectory from sigma^-1(0), i.e. from the base cycle rotated.
    const std::uint32_t start = sigma.inverse().apply(0u);
    const auto offset = static_cast<std::size_t>(
        std::find(base.begin(), base.end(), start) - base.begin());
    for (std::size_t t = 0; t < count; ++t) {
      cur[t] = static_cast<std::uint8_t>(sigma.apply(base[(offset + t) % count]));
    }
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<StateMap> orbit(const StateMap& f) {
  std::vector<StateMap> out;
  for (const SignedPermutation& sigma : all_symmetries(f.width())) {
    out.push_back(apply_symmetry(f, sigma));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Dynamic bitset over indices into the threshold function list.
using Bits = std::vector<std::uint64_t>;

class CycleSearch {
 public:
  CycleSearch(int n, const EnumerationOptions& options)
      : n_(n), count_(std::uint32_t{1} << n), options_(options) {
    if (options.shuffle_seed) rng_.seed(*options.shuffle_seed);
    if (options.pruning == Pruning::kThresholdTable) {
      functions_ = &threshold_functions(n);
      words_ = (functions_->size() + 63) / 64;
      // by_value_[s][v] marks functions f with f(s) = v.
      by_value_.assign(count_, std::array<Bits, 2>{Bits(words_, 0), Bits(words_, 0)});
      for (std::size_t idx = 0; idx < functions_->size(); ++idx) {
        const std::uint32_t table = (*functions_)[idx];
        for (std::uint32_t s = 0; s < count_; ++s) {
          by_value_[s][(table >> s) & 1u][idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
      }
      Bits all(words_, ~std::uint64_t{0});
      if (functions_->size() % 64 != 0) all.back() = (std::uint64_t{1} << (functions_->size() % 64)) - 1;
      candidates_.assign(static_cast<std::size_t>(count_ + 1),
                         std::vector<Bits>(static_cast<std::size_t>(n), all));
    } else {
      tables_.assign(static_cast<std::size_t>(count_ + 1),
                     std::vector<PartialTruthTable>(static_cast<std::size_t>(n), PartialTruthTable(n)));
    }
    visited_.assign(count_, false);
    next_.assign(count_, 0);
  }

  std::vector<std::vector<std::uint32_t>> run() {
    visited_[0] = true;
    extend(0, 0);
    return std::move(found_);
  }

 private:
  // The map already sends the first `depth` states of the cycle onward;
  // `current` is the last state reached and needs a successor.
  void extend(std::uint32_t depth, std::uint32_t current) {
    if (depth + 1 == count_) {
      if (assign(depth, current, 0)) {
        next_[current] = 0;
        found_.push_back(next_);
      }
      return;
    }
    std::vector<std::uint32_t> order;
    order.reserve(count_);
    for (std::uint32_t t = 1; t < count_; ++t) {
      if (!visited_[t]) order.push_back(t);
    }
    if (options_.shuffle_seed) std::shuffle(order.begin(), order.end(), rng_);
    for (std::uint32_t t : order) {
      if (!assign(depth, current, t)) continue;
      visited_[t] = true;
      next_[current] = t;
      extend(depth + 1, t);
      visited_[t] = false;
    }
  }

  // Records f(current) = succ at level depth + 1; false if some coordinate
  // stops being separable.
  bool assign(std::uint32_t depth, std::uint32_t current, std::uint32_t succ) {
    for (int i = 1; i <= n_; ++i) {
      const std::uint32_t bit = (succ >> (n_ - i)) & 1u;
      const auto c = static_cast<std::size_t>(i - 1);
      if (functions_ != nullptr) {
        const Bits& prev = candidates_[depth][c];
        const Bits& mask = by_value_[current][bit];
        Bits& out = candidates_[depth + 1][c];
        std::uint64_t any = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          out[w] = prev[w] & mask[w];
          any |= out[w];
        }
        if (any == 0) return false;
      } else {
        PartialTruthTable& out = tables_[depth + 1][c];
        out = tables_[depth][c];
        out.assign(current, static_cast<int>(bit));
        if (!is_threshold(out)) return false;
      }
    }
    return true;
  }

  int n_;
  std::uint32_t count_;
  EnumerationOptions options_;
  std::mt19937_64 rng_;
  const std::vector<std::uint32_t>* functions_ = nullptr;
  std::size_t words_ = 0;
  std::vector<std::array<Bits, 2>> by_value_;
  std::vector<std::vector<Bits>> candidates_;
  std::vector<std::vector<PartialTruthTable>> tables_;
  std::vector<bool> visited_;
  std::vector<std::uint32_t> next_;
  std::vector<std::vector<std::uint32_t>> found_;
};

Network witness_for(const StateMap& map) {
  const int n = map.width();
  std::vector<ThresholdNeuron> neurons;
  for (int i = 1; i <= n; ++i) {
    std::uint32_t table = 0;
    for (std::uint32_t s = 0; s < map.size(); ++s) table |= ((map(s) >> (n - i)) & 1u) << s;
    std::optional<ThresholdNeuron> f = is_threshold(PartialTruthTable::full(n, table));
    if (!f) throw std::logic_error("enumerated coordinate is not a threshold function");
    neurons.push_back(std::move(*f));
  }
  return Network(n, std::move(neurons));
}

}  // namespace

std::vector<EnumeratedNetwork> enumerate_full_period(int n, const EnumerationOptions& options) {
  if (n < 2 || n > 4) throw std::out_of_range("enumeration supports widths 2..4");
  CycleSearch search(n, options);
  std::vector<std::vector<std::uint32_t>> tables = search.run();

  std::vector<std::pair<std::vector<std::uint32_t>, StateMap>> keyed;
  keyed.reserve(tables.size());
  for (std::vector<std::uint32_t>& table : tables) {
    StateMap map(n, std::move(table));
    keyed.emplace_back(cycle_from_zero(map), std::move(map));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<EnumeratedNetwork> out;
  out.reserve(keyed.size());
  for (auto& [cycle, map] : keyed) {
    Network witness = witness_for(map);
    out.push_back(EnumeratedNetwork{std::move(map), std::move(witness)});
  }
  return out;
}

std::vector<IsoClass> classify(const std::vector<StateMap>& maps) {
  std::map<CanonicalKey, IsoClass> by_key;
  for (const StateMap& f : maps) {
    CanonicalKey key = canonical_key(f);
    IsoClass& cls = by_key[key];
    if (cls.members.empty()) cls.canonical_key = std::move(key);
    cls.members.push_back(f);
    cls.orbit_size = cls.members.size();
  }
  std::vector<IsoClass> out;
  out.reserve(by_key.size());
  for (auto& [key, cls] : by_key) out.push_back(std::move(cls));
  return out;
}

}  // namespace mcpnet
