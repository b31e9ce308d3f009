#pragma once
// Weyl groups of the classical series as signed permutations: S_n for GL_n,
// all signed permutations for SO_{2n+1} and Sp_{2n}, evenly-signed ones for
// SO_{2n}. Elements are indexable by a flat integer, so sums over the group
// can be split deterministically across threads.

#include "branchq/root_data.hpp"
#include "branchq/weight.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace branchq {

// w acts by (w.beta)_i = (-1)^{neg bit i} * beta_{img[i]}: first permute
// coordinates, then flip the marked signs.
struct SignedPerm {
  int n = 0;
  std::array<std::int8_t, kMaxRank> img{};
  std::uint16_t neg = 0;

  static SignedPerm identity(int n) {
    SignedPerm w;
    w.n = n;
    for (int i = 0; i < n; ++i) w.img[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    return w;
  }

  bool negates(int i) const { return (neg >> i) & 1u; }
};

inline Weight apply(const SignedPerm& w, const Weight& beta) {
  if (beta.size() != w.n) throw std::invalid_argument("apply: size mismatch");
  Weight out(w.n);
  for (int i = 0; i < w.n; ++i) {
    Int v = beta[w.img[static_cast<std::size_t>(i)]];
    out[i] = w.negates(i) ? -v : v;
  }
  return out;
}

// Composition satisfying apply(compose(v, w), beta) == apply(v, apply(w, beta)).
inline SignedPerm compose(const SignedPerm& v, const SignedPerm& w) {
  if (v.n != w.n) throw std::invalid_argument("compose: size mismatch");
  SignedPerm c;
  c.n = v.n;
  for (int i = 0; i < v.n; ++i) {
    int vi = v.img[static_cast<std::size_t>(i)];
    c.img[static_cast<std::size_t>(i)] = w.img[static_cast<std::size_t>(vi)];
    bool flip = v.negates(i) ^ w.negates(vi);
    if (flip) c.neg |= static_cast<std::uint16_t>(1u << i);
  }
  return c;
}

inline SignedPerm inverse(const SignedPerm& w) {
  SignedPerm v;
  v.n = w.n;
  for (int i = 0; i < w.n; ++i) {
    int wi = w.img[static_cast<std::size_t>(i)];
    v.img[static_cast<std::size_t>(wi)] = static_cast<std::int8_t>(i);
    if (w.negates(i)) v.neg |= static_cast<std::uint16_t>(1u << wi);
  }
  return v;
}

// (-1)^{length}: the permutation parity times (-1)^{number of sign flips}.
inline int sign_of(const SignedPerm& w) {
  int inv = 0;
  for (int i = 0; i < w.n; ++i)
    for (int j = i + 1; j < w.n; ++j)
      if (w.img[static_cast<std::size_t>(i)] > w.img[static_cast<std::size_t>(j)]) ++inv;
  int flips = 0;
  for (int i = 0; i < w.n; ++i)
    if (w.negates(i)) ++flips;
  return ((inv + flips) % 2 == 0) ? 1 : -1;
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Group order: n! (GL), 2^n n! (SOodd, Sp), 2^{n-1} n! (SOeven).
inline std::uint64_t weyl_order(GroupSpec g) {
  check_rank(g);
  const std::uint64_t f = factorial_u64(g.rank);
  switch (g.family) {
    case Family::GL: return f;
    case Family::SOodd:
    case Family::Sp: return f << g.rank;
    case Family::SOeven: return g.rank == 1 ? 1 : (f << (g.rank - 1));
  }
  return 0;
}

// Lexicographic unranking of a permutation of {0..n-1} (factorial base).
inline void unrank_permutation(std::uint64_t idx, int n, std::array<std::int8_t, kMaxRank>& img) {
  std::array<std::int8_t, kMaxRank> avail{};
  for (int i = 0; i < n; ++i) avail[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial_u64(n - 1 - i);
    int pick = static_cast<int>(idx / f);
    idx %= f;
    img[static_cast<std::size_t>(i)] = avail[static_cast<std::size_t>(pick)];
    for (int k = pick; k + 1 < n - i; ++k) avail[static_cast<std::size_t>(k)] = avail[static_cast<std::size_t>(k + 1)];
  }
}

// Element with the given flat index in [0, weyl_order(g)). The low bits pick
// the sign pattern, the high part the permutation. For SOeven the top sign
// bit is the parity completion of the other n-1, so the map is a bijection
// onto evenly-signed permutations.
inline SignedPerm weyl_element(GroupSpec g, std::uint64_t idx) {
  const int n = g.rank;
  std::uint64_t mask_count;
  switch (g.family) {
    case Family::GL: mask_count = 1; break;
    case Family::SOodd:
    case Family::Sp: mask_count = std::uint64_t(1) << n; break;
    case Family::SOeven: mask_count = n == 1 ? 1 : (std::uint64_t(1) << (n - 1)); break;
    default: mask_count = 1;
  }
  std::uint64_t bits = idx % mask_count;
  std::uint64_t pidx = idx / mask_count;
  SignedPerm w;
  w.n = n;
  unrank_permutation(pidx, n, w.img);
  if (g.family == Family::SOodd || g.family == Family::Sp) {
    w.neg = static_cast<std::uint16_t>(bits);
  } else if (g.family == Family::SOeven && n >= 2) {
    int parity = 0;
    for (int i = 0; i < n - 1; ++i) parity ^= static_cast<int>((bits >> i) & 1u);
    w.neg = static_cast<std::uint16_t>(bits | (static_cast<std::uint64_t>(parity) << (n - 1)));
  }
  return w;
}

// Serial iteration over the whole group: fn(element, sign).
template <typename Fn>
void for_each_weyl(GroupSpec g, Fn&& fn) {
  const std::uint64_t N = weyl_order(g);
  for (std::uint64_t k = 0; k < N; ++k) {
    SignedPerm w = weyl_element(g, k);
    fn(w, sign_of(w));
  }
}

// Dot action w o lambda = w(lambda + rho) - rho, computed in doubled
// coordinates so rho never needs halving; the result is checked to land back
// on the integer lattice.
inline Weight dot_action(GroupSpec g, const SignedPerm& w, const Weight& lambda) {
  Weight r2 = rho2(g);
  Weight x(g.rank);
  for (int i = 0; i < g.rank; ++i) x[i] = 2 * lambda[i] + r2[i];
  Weight y = apply(w, x);
  Weight out(g.rank);
  for (int i = 0; i < g.rank; ++i) {
    Int d = y[i] - r2[i];
    if (d % 2 != 0) throw std::logic_error("dot_action: off-lattice result");
    out[i] = d / 2;
  }
  return out;
}

// Dot action of a plain permutation using the GL Weyl vector (n, ..., 1),
// regardless of which family lambda belongs to. This is the action used by
// the stable-limit sums, which run over the symmetric group only.
inline Weight dot_action_sym(const SignedPerm& w, const Weight& lambda) {
  const int n = w.n;
  if (w.neg != 0) throw std::invalid_argument("dot_action_sym: expected an unsigned permutation");
  Weight x(n);
  for (int i = 0; i < n; ++i) x[i] = lambda[i] + (n - i);
  Weight y = apply(w, x);
  Weight out(n);
  for (int i = 0; i < n; ++i) out[i] = y[i] - (n - i);
  return out;
}

// Straightening for the symmetric group with rho = (n, ..., 1): returns the
// sign and the unique weakly decreasing representative of the dot orbit, or
// sign 0 when xi + rho has a repeated coordinate (the orbit sums to zero).
struct Straightened {
  int sign = 0;       // -1, 0, +1
  Weight weight{};    // valid when sign != 0
};

inline Straightened straighten_sym(const Weight& xi) {
  const int n = xi.size();
  Weight v(n);
  for (int i = 0; i < n; ++i) v[i] = xi[i] + (n - i);
  // Sort descending, counting inversions (each adjacent swap flips the sign).
  int sign = 1;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j > 0 && v[j] > v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  }
  for (int i = 0; i + 1 < n; ++i)
    if (v[i] == v[i + 1]) return {0, Weight(n)};
  Weight out(n);
  for (int i = 0; i < n; ++i) out[i] = v[i] - (n - i);
  return {sign, out};
}

}  // namespace branchq
