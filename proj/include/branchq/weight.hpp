#pragma once
// Fixed-capacity integer coordinate vectors. Used for weights of the diagonal
// torus, roots, and integer linear functionals on the weight lattice.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchq {

using Int = std::int64_t;

// Hard capacity of the coordinate type. Computations are desk-scale; the CLI
// additionally enforces a softer default guard (see cli.hpp).
inline constexpr int kMaxRank = 12;

class Weight {
 public:
  Weight() = default;

  explicit Weight(int n) : n_(n) {
    check_size(n);
    c_.fill(0);
  }

  Weight(std::initializer_list<Int> xs) {
    check_size(static_cast<int>(xs.size()));
    c_.fill(0);
    for (Int x : xs) c_[static_cast<std::size_t>(n_++)] = x;
  }

  static Weight from(const std::vector<Int>& v) {
    check_size(static_cast<int>(v.size()));
    Weight w(static_cast<int>(v.size()));
    for (int i = 0; i < w.n_; ++i) w.c_[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
    return w;
  }

  // All-ones vector (1,...,1) of length n.
  static Weight ones(int n) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = 1;
    return w;
  }

  int size() const { return n_; }

  Int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool operator==(const Weight& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i) if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  bool operator!=(const Weight& o) const { return !(*this == o); }

  // Lexicographic order; usable as a map key.
  bool operator<(const Weight& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < n_; ++i) {
      Int a = c_[static_cast<std::size_t>(i)], b = o.c_[static_cast<std::size_t>(i)];
      if (a != b) return a < b;
    }
    return false;
  }

  Weight& operator+=(const Weight& o) {
    require_same_size(o);
    for (int i = 0; i < n_; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    require_same_size(o);
    for (int i = 0; i < n_; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const {
    Weight w(n_);
    for (int i = 0; i < n_; ++i) w[i] = -c_[static_cast<std::size_t>(i)];
    return w;
  }

  // Adds c to every coordinate (translation by c·(1,...,1)).
  Weight plus_constant(Int c) const {
    Weight w = *this;
    for (int i = 0; i < n_; ++i) w[i] += c;
    return w;
  }

  // Reverses the coordinates and negates them: (b_1,...,b_n) -> (-b_n,...,-b_1).
  Weight reversed_negated() const {
    Weight w(n_);
    for (int i = 0; i < n_; ++i) w[i] = -c_[static_cast<std::size_t>(n_ - 1 - i)];
    return w;
  }

  Int total() const {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += c_[static_cast<std::size_t>(i)];
    return s;
  }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i) if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  bool all_nonneg() const {
    for (int i = 0; i < n_; ++i) if (c_[static_cast<std::size_t>(i)] < 0) return false;
    return true;
  }

  bool weakly_decreasing() const {
    for (int i = 0; i + 1 < n_; ++i) if (c_[static_cast<std::size_t>(i)] < c_[static_cast<std::size_t>(i + 1)]) return false;
    return true;
  }

  // Weakly decreasing with nonnegative entries.
  bool is_partition() const {
    return weakly_decreasing() && (n_ == 0 || c_[static_cast<std::size_t>(n_ - 1)] >= 0);
  }

  std::vector<Int> vec() const {
    return std::vector<Int>(c_.begin(), c_.begin() + n_);
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < n_; ++i) {
      if (i) os << ',';
      os << c_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
  }

 private:
  static void check_size(int n) {
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("Weight: size out of range");
  }
  void require_same_size(const Weight& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Weight: size mismatch");
  }

  int n_ = 0;
  std::array<Int, kMaxRank> c_{};
};

inline Int dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(w.size()));
    for (int i = 0; i < w.size(); ++i) mix(static_cast<std::uint64_t>(w[i]));
    return h;
  }
};

}  // namespace branchq
