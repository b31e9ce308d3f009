#pragma once
// Root data for the four classical series in coordinates: GL_n (type A_{n-1}),
// SO_{2n+1} (B_n), Sp_{2n} (C_n), SO_{2n} (D_n), all realized on the rank-n
// diagonal torus lattice Z^n. Also: standard Levi subgroups picked by a set I
// of retained simple roots, the root complement S_{G,I} feeding the vector
// partition functions, and factor naming.

#include "branchq/weight.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchq {

enum class Family { GL, SOodd, Sp, SOeven };

struct GroupSpec {
  Family family;
  int rank;  // n: coordinates of the diagonal torus

  bool operator==(const GroupSpec& o) const { return family == o.family && rank == o.rank; }
};

inline const char* family_code(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::SOodd: return "so-odd";
    case Family::Sp: return "sp";
    case Family::SOeven: return "so-even";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "gl") return Family::GL;
  if (s == "so-odd") return Family::SOodd;
  if (s == "sp") return Family::Sp;
  if (s == "so-even") return Family::SOeven;
  return std::nullopt;
}

inline std::string ambient_name(GroupSpec g) {
  std::ostringstream os;
  switch (g.family) {
    case Family::GL: os << "GL_" << g.rank; break;
    case Family::SOodd: os << "SO_" << (2 * g.rank + 1); break;
    case Family::Sp: os << "Sp_" << (2 * g.rank); break;
    case Family::SOeven: os << "SO_" << (2 * g.rank); break;
  }
  return os.str();
}

inline void check_rank(GroupSpec g) {
  if (g.rank < 1 || g.rank > kMaxRank) throw std::invalid_argument("rank out of range");
}

// Number of simple roots. SO_2 (rank-1 even orthogonal) is a torus: none.
inline int num_simple_roots(GroupSpec g) {
  check_rank(g);
  switch (g.family) {
    case Family::GL: return g.rank - 1;
    case Family::SOodd:
    case Family::Sp: return g.rank;
    case Family::SOeven: return g.rank >= 2 ? g.rank : 0;
  }
  return 0;
}

// i is 1-based. For i < n every family shares alpha_i = e_i - e_{i+1}; the
// last simple root is e_n (SOodd), 2e_n (Sp), e_{n-1}+e_n (SOeven).
inline Weight simple_root(GroupSpec g, int i) {
  const int n = g.rank;
  if (i < 1 || i > num_simple_roots(g)) throw std::invalid_argument("simple root index out of range");
  Weight a(n);
  if (i < n) {
    a[i - 1] = 1;
    a[i] = -1;
    return a;
  }
  switch (g.family) {
    case Family::GL: break;  // cannot happen: i <= n-1
    case Family::SOodd: a[n - 1] = 1; return a;
    case Family::Sp: a[n - 1] = 2; return a;
    case Family::SOeven: a[n - 2] = 1; a[n - 1] = 1; return a;
  }
  throw std::logic_error("simple_root");
}

// Positive roots, deterministic order: differences e_i - e_j (i<j, lex), then
// the family-specific part (sums / short / long roots).
inline std::vector<Weight> positive_roots(GroupSpec g) {
  check_rank(g);
  const int n = g.rank;
  std::vector<Weight> out;
  auto unit = [n](int i, Int v) {
    Weight w(n);
    w[i] = v;
    return w;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1) + unit(j, -1));
  switch (g.family) {
    case Family::GL:
      break;
    case Family::SOodd:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1) + unit(j, 1));
      for (int i = 0; i < n; ++i) out.push_back(unit(i, 1));
      break;
    case Family::Sp:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1) + unit(j, 1));
      for (int i = 0; i < n; ++i) out.push_back(unit(i, 2));
      break;
    case Family::SOeven:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1) + unit(j, 1));
      break;
  }
  return out;
}

// Doubled Weyl vector used by the dot action. For SOodd/Sp/SOeven this is
// exactly the sum of the positive roots. For GL we use rho = (n, ..., 1),
// which differs from the half-sum of positive roots by a multiple of
// (1,...,1); every symmetric-group dot action and straightening is unchanged.
inline Weight rho2(GroupSpec g) {
  check_rank(g);
  const int n = g.rank;
  Weight r(n);
  switch (g.family) {
    case Family::GL:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i);
      break;
    case Family::SOodd:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i) - 1;
      break;
    case Family::Sp:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i);
      break;
    case Family::SOeven:
      for (int i = 0; i < n; ++i) r[i] = 2 * (n - i) - 2;
      break;
  }
  return r;
}

// The "sum side" generators Theta_G: sums e_i+e_j (i<j), plus the short roots
// e_i for SOodd / the long roots 2e_i for Sp. Undefined for GL.
inline std::vector<Weight> theta_set(GroupSpec g) {
  if (g.family == Family::GL) throw std::invalid_argument("theta_set: undefined for GL");
  const int n = g.rank;
  std::vector<Weight> out;
  auto unit = [n](int i, Int v) {
    Weight w(n);
    w[i] = v;
    return w;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1) + unit(j, 1));
  if (g.family == Family::SOodd)
    for (int i = 0; i < n; ++i) out.push_back(unit(i, 1));
  if (g.family == Family::Sp)
    for (int i = 0; i < n; ++i) out.push_back(unit(i, 2));
  return out;
}

// Theta_G minus its unique element supported on the last coordinate only
// (e_n, 2e_n, or e_{n-1}+e_n).
inline std::vector<Weight> theta_star_set(GroupSpec g) {
  const int n = g.rank;
  Weight drop(n);
  switch (g.family) {
    case Family::GL: throw std::invalid_argument("theta_star_set: undefined for GL");
    case Family::SOodd: drop[n - 1] = 1; break;
    case Family::Sp: drop[n - 1] = 2; break;
    case Family::SOeven:
      if (n < 2) throw std::invalid_argument("theta_star_set: rank too small");
      drop[n - 2] = 1;
      drop[n - 1] = 1;
      break;
  }
  std::vector<Weight> out;
  for (const auto& w : theta_set(g))
    if (w != drop) out.push_back(w);
  return out;
}

// Expansion of beta in the simple-root basis, solved in closed form via
// partial sums (exact; the last one or two coefficients need a parity
// division). Returns nullopt when beta is not an integer combination.
inline std::optional<std::vector<Int>> simple_root_expansion(GroupSpec g, const Weight& beta) {
  const int n = g.rank;
  if (beta.size() != n) throw std::invalid_argument("simple_root_expansion: size mismatch");
  const int m = num_simple_roots(g);
  std::vector<Int> x(static_cast<std::size_t>(m), 0);
  std::vector<Int> s(static_cast<std::size_t>(n + 1), 0);  // prefix sums of beta
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i + 1)] = s[static_cast<std::size_t>(i)] + beta[i];
  switch (g.family) {
    case Family::GL:
      if (s[static_cast<std::size_t>(n)] != 0) return std::nullopt;
      for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(i)];
      break;
    case Family::SOodd:
      for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(n - 1)] = s[static_cast<std::size_t>(n)];
      break;
    case Family::Sp:
      if (s[static_cast<std::size_t>(n)] % 2 != 0) return std::nullopt;
      for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(n - 1)] = s[static_cast<std::size_t>(n)] / 2;
      break;
    case Family::SOeven: {
      if (n == 1) return beta.is_zero() ? std::make_optional(x) : std::nullopt;
      for (int i = 1; i <= n - 2; ++i) x[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(i)];
      // x_{n-1} + x_n = s_{n-2} + beta_{n-1} and x_n - x_{n-1} = beta_n.
      Int a = s[static_cast<std::size_t>(n - 2)] + beta[n - 2];
      Int b = beta[n - 1];
      if ((a + b) % 2 != 0) return std::nullopt;
      x[static_cast<std::size_t>(n - 2)] = (a - b) / 2;
      x[static_cast<std::size_t>(n - 1)] = (a + b) / 2;
      break;
    }
  }
  // Reconstruction check keeps the closed form honest.
  Weight back(n);
  for (int i = 1; i <= m; ++i) {
    Weight a = simple_root(g, i);
    for (int c = 0; c < n; ++c) back[c] += x[static_cast<std::size_t>(i - 1)] * a[c];
  }
  if (back != beta) return std::nullopt;
  return x;
}

// 1-based indices of simple roots appearing in the expansion of a root.
inline std::vector<int> root_support(GroupSpec g, const Weight& alpha) {
  auto x = simple_root_expansion(g, alpha);
  if (!x) throw std::invalid_argument("root_support: not in the root lattice");
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(x->size()); ++i)
    if ((*x)[static_cast<std::size_t>(i)] != 0) out.push_back(i + 1);
  return out;
}

inline std::vector<int> all_simple_indices(GroupSpec g) {
  std::vector<int> out;
  for (int i = 1; i <= num_simple_roots(g); ++i) out.push_back(i);
  return out;
}

// Positive roots of the Levi subgroup: those whose simple-root support lies
// inside I (1-based indices).
inline std::vector<Weight> levi_positive_roots(GroupSpec g, const std::vector<int>& I) {
  std::vector<bool> in(static_cast<std::size_t>(num_simple_roots(g) + 1), false);
  for (int i : I) {
    if (i < 1 || i > num_simple_roots(g)) throw std::invalid_argument("levi: simple root index out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<Weight> out;
  for (const auto& alpha : positive_roots(g)) {
    bool inside = true;
    for (int i : root_support(g, alpha)) {
      if (!in[static_cast<std::size_t>(i)]) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(alpha);
  }
  return out;
}

// S_{G,I}: positive roots outside the Levi. These generate the vector
// partition function whose alternating Weyl sums give the q-analogues.
inline std::vector<Weight> s_set(GroupSpec g, const std::vector<int>& I) {
  std::vector<bool> in(static_cast<std::size_t>(num_simple_roots(g) + 1), false);
  for (int i : I) {
    if (i < 1 || i > num_simple_roots(g)) throw std::invalid_argument("levi: simple root index out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<Weight> out;
  for (const auto& alpha : positive_roots(g)) {
    bool inside = true;
    for (int i : root_support(g, alpha)) {
      if (!in[static_cast<std::size_t>(i)]) {
        inside = false;
        break;
      }
    }
    if (!inside) out.push_back(alpha);
  }
  return out;
}

struct LeviFactor {
  enum class Kind { GL, SL, SOodd, Sp, SOeven, Torus };
  Kind kind;
  int subscript;  // printed subscript: GL_l, SL_m, Sp_2l, SO_{2l+1}, SO_2l

  std::string name() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::GL: os << "GL_"; break;
      case Kind::SL: os << "SL_"; break;
      case Kind::SOodd:
      case Kind::SOeven:
      case Kind::Torus: os << "SO_"; break;
      case Kind::Sp: os << "Sp_"; break;
    }
    os << subscript;
    return os.str();
  }
};

// A standard Levi subgroup: retained simple roots I, the flat block sizes
// used to read a weight mu in Z^n as a tuple of block weights, the size of
// the trailing non-GL block (0 when absent), and the factor list.
struct LeviData {
  GroupSpec g{Family::GL, 1};
  std::vector<int> I;       // sorted, 1-based
  std::vector<int> blocks;  // consecutive block sizes summing to rank
  int tail = 0;             // size of the non-GL tail block; 0 if none
  std::vector<LeviFactor> factors;

  std::string name() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "×";  // multiplication sign
      os << factors[k].name();
    }
    return os.str();
  }
};

// Splits {1..#simples} \ I into the gap positions j_1 < ... < j_r; the GL
// block sizes are the gaps and the tail is what remains after j_r. Factor
// kinds follow the connected components of the Dynkin diagram after removing
// the gap nodes; in particular an SOeven tail of size 1 at rank >= 3 merges
// coordinate n into the preceding GL block (twisted embedding), a tail of
// size 2 splits as SL_2 x SL_2, and a tail of size 3 is SL_4.
inline LeviData levi_decomposition(GroupSpec g, const std::vector<int>& Iin) {
  check_rank(g);
  const int n = g.rank;
  const int m = num_simple_roots(g);
  std::vector<int> I = Iin;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I)
    if (i < 1 || i > m) throw std::invalid_argument("levi: simple root index out of range");

  LeviData L;
  L.g = g;
  L.I = I;

  std::vector<bool> in(static_cast<std::size_t>(m + 1), false);
  for (int i : I) in[static_cast<std::size_t>(i)] = true;
  std::vector<int> J;
  for (int j = 1; j <= m; ++j)
    if (!in[static_cast<std::size_t>(j)]) J.push_back(j);

  std::vector<int> gl_sizes;
  int prev = 0;
  for (int j : J) {
    gl_sizes.push_back(j - prev);
    prev = j;
  }

  if (g.family == Family::GL) {
    gl_sizes.push_back(n - prev);  // the final block is a GL block too
    L.blocks = gl_sizes;
    L.tail = 0;
    for (int l : gl_sizes) L.factors.push_back({LeviFactor::Kind::GL, l});
    return L;
  }

  int tail = n - prev;
  L.blocks = gl_sizes;
  if (tail > 0) L.blocks.push_back(tail);
  L.tail = tail;

  auto push_gl = [&L](int l) { L.factors.push_back({LeviFactor::Kind::GL, l}); };

  if (tail == 0) {
    for (int l : gl_sizes) push_gl(l);
    return L;
  }

  switch (g.family) {
    case Family::GL:
      break;  // handled above
    case Family::SOodd:
      for (int l : gl_sizes) push_gl(l);
      if (tail == 1) L.factors.push_back({LeviFactor::Kind::SL, 2});
      else L.factors.push_back({LeviFactor::Kind::SOodd, 2 * tail + 1});
      break;
    case Family::Sp:
      for (int l : gl_sizes) push_gl(l);
      if (tail == 1) L.factors.push_back({LeviFactor::Kind::SL, 2});
      else L.factors.push_back({LeviFactor::Kind::Sp, 2 * tail});
      break;
    case Family::SOeven:
      if (tail == 1) {
        if (n == 1) {
          L.factors.push_back({LeviFactor::Kind::Torus, 2});  // SO_2: no roots
        } else if (n == 2) {
          // alpha_2 = e_1+e_2 is isolated from alpha_1 in the D_2 diagram.
          for (int l : gl_sizes) push_gl(l);
          L.factors.push_back({LeviFactor::Kind::SL, 2});
        } else {
          // alpha_n stays attached to alpha_{n-2}: the last GL block absorbs
          // coordinate n (with negated sign), growing by one.
          for (std::size_t k = 0; k + 1 < gl_sizes.size(); ++k) push_gl(gl_sizes[k]);
          push_gl(gl_sizes.back() + 1);
        }
      } else {
        for (int l : gl_sizes) push_gl(l);
        if (tail == 2) {
          L.factors.push_back({LeviFactor::Kind::SL, 2});
          L.factors.push_back({LeviFactor::Kind::SL, 2});
        } else if (tail == 3) {
          L.factors.push_back({LeviFactor::Kind::SL, 4});
        } else {
          L.factors.push_back({LeviFactor::Kind::SOeven, 2 * tail});
        }
      }
      break;
  }
  return L;
}

// Flat validity of mu for the Levi: every GL block weakly decreasing, and the
// trailing non-GL block (when present) weakly decreasing with nonnegative
// entries. Returns an error message naming the offending block, or nullopt.
inline std::optional<std::string> levi_weight_error(GroupSpec g, const std::vector<int>& I, const Weight& mu) {
  LeviData L = levi_decomposition(g, I);
  if (mu.size() != g.rank) return std::string("mu has length ") + std::to_string(mu.size()) + ", expected " + std::to_string(g.rank);
  int at = 0;
  for (std::size_t k = 0; k < L.blocks.size(); ++k) {
    const int b = L.blocks[k];
    const bool is_tail = (g.family != Family::GL) && L.tail > 0 && k + 1 == L.blocks.size();
    for (int i = 0; i + 1 < b; ++i) {
      if (mu[at + i] < mu[at + i + 1]) {
        return std::string("block ") + std::to_string(k + 1) + " of mu is not weakly decreasing";
      }
    }
    if (is_tail && mu[at + b - 1] < 0) {
      return std::string("block ") + std::to_string(k + 1) + " of mu (the tail block) must be nonnegative";
    }
    at += b;
  }
  return std::nullopt;
}

// All subsets of the simple roots, as sorted index vectors, in a fixed
// deterministic order (bitmask order).
inline std::vector<std::vector<int>> all_levi_subsets(GroupSpec g) {
  const int m = num_simple_roots(g);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) I.push_back(i + 1);
    out.push_back(std::move(I));
  }
  return out;
}

}  // namespace branchq
