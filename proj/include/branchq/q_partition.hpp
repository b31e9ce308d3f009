#pragma once
// Quantized vector partition functions: the coefficient of e^beta in
// prod_g 1/(1 - q^{w(g)} e^g) over a finite generator set g, i.e. the
// generating polynomial over all multisets of generators summing to beta,
// graded by total weighted multiplicity. Evaluated by a memoized two-branch
// recursion (skip generator k / take generator k once more), with linear
// pruning functionals that vanish or decrease along every generator.

#include "branchq/qpoly.hpp"
#include "branchq/root_data.hpp"
#include "branchq/weight.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace branchq {

struct Generator {
  Weight v;
  int qexp = 1;  // exponent contributed per use; unit is q, or t = q^(1/2)
                 // for the half-step graded families
};

// Exponent convention. Uniform: every generator contributes q^1 per use.
// ShortHalf: exponents are counted in half-steps t = q^(1/2): short-type
// generators (a single +-e_i) contribute t^1, all others t^2. This grading
// keeps the sum-side counting a monomial in t and closes the decomposition
// identities for the odd orthogonal family with integer exponents.
enum class Weighting { Uniform, ShortHalf };

inline int weight_exponent(const Weight& v, Weighting w) {
  if (w == Weighting::Uniform) return 1;
  Int abs_sum = 0;
  for (int i = 0; i < v.size(); ++i) abs_sum += v[i] < 0 ? -v[i] : v[i];
  return abs_sum == 1 ? 1 : 2;
}

struct GeneratorSet {
  int n = 0;
  std::vector<Generator> gens;
  // Linear functionals f with f(g) >= 0 for every generator; prunes[0] is
  // strict (f(g) >= 1), so it bounds the multiset size and the recursion.
  std::vector<Weight> prunes;
  std::string label;

  void validate() const {
    if (prunes.empty()) throw std::logic_error("GeneratorSet: missing certificate");
    for (const auto& g : gens) {
      if (g.v.size() != n) throw std::logic_error("GeneratorSet: size mismatch");
      if (dot(prunes[0], g.v) < 1) throw std::logic_error("GeneratorSet: certificate not strict on " + g.v.str());
      for (const auto& p : prunes)
        if (dot(p, g.v) < 0) throw std::logic_error("GeneratorSet: prune negative on " + g.v.str());
      if (g.qexp < 1) throw std::logic_error("GeneratorSet: nonpositive exponent");
    }
  }
};

namespace detail {

inline Weight descending_functional(int n) {
  Weight f(n);
  for (int i = 0; i < n; ++i) f[i] = n - i;
  return f;
}

inline Weight ascending_negated_functional(int n) {
  Weight f(n);
  for (int i = 0; i < n; ++i) f[i] = -(i + 1);
  return f;
}

// Prunes for generator sets lying in the "lower" cone (differences e_i - e_j
// with i < j, sums, and positive short/long roots).
inline std::vector<Weight> lower_cone_prunes(int n) {
  return {descending_functional(n), Weight::ones(n)};
}

// Prunes for generator sets lying in the "upper" cone (differences e_i - e_j
// with i < j and negated sums).
inline std::vector<Weight> upper_cone_prunes(int n) {
  return {ascending_negated_functional(n), -Weight::ones(n)};
}

inline void validate_blocks(int n, const std::vector<int>& eta) {
  int s = 0;
  for (int b : eta) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    s += b;
  }
  if (s != n) throw std::invalid_argument("block sizes must sum to the rank");
}

// 0-based block index of each coordinate.
inline std::vector<int> block_of(int n, const std::vector<int>& eta) {
  validate_blocks(n, eta);
  std::vector<int> blk(static_cast<std::size_t>(n), 0);
  int at = 0, b = 0;
  for (int size : eta) {
    for (int i = 0; i < size; ++i) blk[static_cast<std::size_t>(at++)] = b;
    ++b;
  }
  return blk;
}

inline std::string blocks_str(const std::vector<int>& eta) {
  std::ostringstream os;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (i) os << ',';
    os << eta[i];
  }
  return os.str();
}

}  // namespace detail

// Roots outside the Levi: S_{G,I}, the generator set of the q-analogue sums.
inline GeneratorSet sgi_generators(GroupSpec g, const std::vector<int>& I, Weighting w = Weighting::Uniform) {
  if (w == Weighting::ShortHalf && g.family != Family::SOodd)
    throw std::invalid_argument("half-step grading is defined for the odd orthogonal family only");
  GeneratorSet out;
  out.n = g.rank;
  for (const auto& a : s_set(g, I)) out.gens.push_back({a, weight_exponent(a, w)});
  out.prunes = detail::lower_cone_prunes(g.rank);
  std::ostringstream os;
  os << "S[" << family_code(g.family) << g.rank << ";I={";
  for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
  os << "}" << (w == Weighting::ShortHalf ? ";t" : "") << "]";
  out.label = os.str();
  out.validate();
  return out;
}

// The sum-side set Theta_G (sums e_i+e_j plus the short or long one-line
// roots); counts decompositions into "column pairs".
inline GeneratorSet theta_generators(GroupSpec g, Weighting w = Weighting::Uniform) {
  if (w == Weighting::ShortHalf && g.family != Family::SOodd)
    throw std::invalid_argument("half-step grading is defined for the odd orthogonal family only");
  GeneratorSet out;
  out.n = g.rank;
  for (const auto& a : theta_set(g)) out.gens.push_back({a, weight_exponent(a, w)});
  out.prunes = detail::lower_cone_prunes(g.rank);
  out.label = std::string("Theta[") + family_code(g.family) + std::to_string(g.rank) +
              (w == Weighting::ShortHalf ? ";t]" : "]");
  out.validate();
  return out;
}

// Cross-block pairs (i, j): i in an earlier block than j.
inline std::vector<std::pair<int, int>> cross_block_pairs(int n, const std::vector<int>& eta) {
  auto blk = detail::block_of(n, eta);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (blk[static_cast<std::size_t>(i)] < blk[static_cast<std::size_t>(j)]) out.emplace_back(i, j);
  return out;
}

// For each cross-block pair both e_i - e_j and e_i + e_j, uniform exponents.
inline GeneratorSet p_eta_generators(int n, const std::vector<int>& eta) {
  GeneratorSet out;
  out.n = n;
  for (auto [i, j] : cross_block_pairs(n, eta)) {
    Weight d(n), s(n);
    d[i] = 1;
    d[j] = -1;
    s[i] = 1;
    s[j] = 1;
    out.gens.push_back({d, 1});
    out.gens.push_back({s, 1});
  }
  out.prunes = detail::lower_cone_prunes(n);
  out.label = "P[eta=" + detail::blocks_str(eta) + "]";
  out.validate();
  return out;
}

// For each cross-block pair both e_i - e_j and -e_i - e_j, uniform exponents.
inline GeneratorSet q_eta_generators(int n, const std::vector<int>& eta) {
  GeneratorSet out;
  out.n = n;
  for (auto [i, j] : cross_block_pairs(n, eta)) {
    Weight d(n), s(n);
    d[i] = 1;
    d[j] = -1;
    s[i] = -1;
    s[j] = -1;
    out.gens.push_back({d, 1});
    out.gens.push_back({s, 1});
  }
  out.prunes = detail::upper_cone_prunes(n);
  out.label = "Q[eta=" + detail::blocks_str(eta) + "]";
  out.validate();
  return out;
}

// q-deformed tensor-side set for a non-GL family: cross-block differences
// plus the negated sum-side roots of the family dual to G (negated pairs for
// Sp; negated pairs and doubles for SOeven; negated pairs and negated short
// roots, half-step graded, for SOodd).
inline GeneratorSet qfrak_generators(GroupSpec g, const std::vector<int>& eta) {
  if (g.family == Family::GL) throw std::invalid_argument("qfrak_generators: non-GL families only");
  const int n = g.rank;
  const bool half = g.family == Family::SOodd;
  GeneratorSet out;
  out.n = n;
  for (auto [i, j] : cross_block_pairs(n, eta)) {
    Weight d(n);
    d[i] = 1;
    d[j] = -1;
    out.gens.push_back({d, half ? 2 : 1});
  }
  auto pair_gen = [n](int r, int s) {
    Weight w(n);
    w[r] -= 1;
    w[s] -= 1;
    return w;
  };
  switch (g.family) {
    case Family::Sp:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) out.gens.push_back({pair_gen(r, s), 1});
      break;
    case Family::SOeven:
      for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) out.gens.push_back({pair_gen(r, s), 1});
      break;
    case Family::SOodd:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) out.gens.push_back({pair_gen(r, s), 2});
      for (int r = 0; r < n; ++r) {
        Weight w(n);
        w[r] = -1;
        out.gens.push_back({w, 1});
      }
      break;
    default:
      break;
  }
  out.prunes = detail::upper_cone_prunes(n);
  out.label = std::string("Qfrak[") + family_code(g.family) + std::to_string(n) + ";eta=" +
              detail::blocks_str(eta) + (half ? ";t]" : "]");
  out.validate();
  return out;
}

inline constexpr std::size_t kDefaultMemoEntries = std::size_t(1) << 22;

// Memoized evaluator for one generator set. Thread-safe: the memo is sharded
// behind mutexes and entries are pure values, so concurrent evaluation is
// deterministic. Past the entry cap, results are still computed, just not
// stored.
class QCounter {
 public:
  explicit QCounter(GeneratorSet gs, std::size_t memo_cap = kDefaultMemoEntries)
      : gs_(std::move(gs)), cap_(memo_cap) {
    gs_.validate();
  }

  const GeneratorSet& generators() const { return gs_; }

  QPoly count(const Weight& beta) {
    if (beta.size() != gs_.n) throw std::invalid_argument("QCounter::count: size mismatch");
    return rec(beta, 0);
  }

  std::size_t memo_size() const { return entries_.load(std::memory_order_relaxed); }

 private:
  struct Key {
    Weight beta;
    int k;
    bool operator==(const Key& o) const { return k == o.k && beta == o.beta; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      return WeightHash{}(key.beta) * 1000003u + static_cast<std::size_t>(key.k);
    }
  };
  struct Shard {
    std::mutex mu;
    std::unordered_map<Key, QPoly, KeyHash> tab;
  };
  static constexpr std::size_t kShards = 16;

  QPoly rec(const Weight& beta, int k) {
    for (const auto& p : gs_.prunes)
      if (dot(p, beta) < 0) return QPoly();
    // beta == 0 admits only the empty multiset: every generator is strictly
    // positive on prunes[0], so no nonempty combination can cancel to zero.
    if (beta.is_zero()) return QPoly::monomial(0);
    if (k == static_cast<int>(gs_.gens.size())) return QPoly();

    Key key{beta, k};
    const std::size_t h = KeyHash{}(key);
    Shard& shard = shards_[h % kShards];
    {
      std::lock_guard<std::mutex> lock(shard.mu);
      auto it = shard.tab.find(key);
      if (it != shard.tab.end()) return it->second;
    }

    QPoly result = rec(beta, k + 1);  // never use generator k again
    result += rec(beta - gs_.gens[static_cast<std::size_t>(k)].v, k)
                  .shifted(gs_.gens[static_cast<std::size_t>(k)].qexp);

    if (entries_.load(std::memory_order_relaxed) < cap_) {
      std::lock_guard<std::mutex> lock(shard.mu);
      auto [it, inserted] = shard.tab.emplace(std::move(key), result);
      (void)it;
      if (inserted) entries_.fetch_add(1, std::memory_order_relaxed);
    }
    return result;
  }

  GeneratorSet gs_;
  std::size_t cap_;
  std::array<Shard, kShards> shards_;
  std::atomic<std::size_t> entries_{0};
};

// Independent brute-force oracle: enumerates the multiplicity of each
// generator explicitly (last generator first), no memoization, no shared
// code path with QCounter::rec. Guarded by the certificate bound.
inline QPoly brute_qcount(const GeneratorSet& gs, const Weight& beta, Int bound = 60) {
  gs.validate();
  if (beta.size() != gs.n) throw std::invalid_argument("brute_qcount: size mismatch");
  const Weight& cert = gs.prunes[0];
  if (dot(cert, beta) > bound) throw std::domain_error("brute_qcount: certificate value above bound");
  QPoly acc;
  auto ok = [&gs](const Weight& v) {
    for (const auto& p : gs.prunes)
      if (dot(p, v) < 0) return false;
    return true;
  };
  auto go = [&](auto&& self, int k, Weight residual, long long exp_acc) -> void {
    if (k < 0) {
      if (residual.is_zero()) acc.add_term(static_cast<int>(exp_acc), 1);
      return;
    }
    const Generator& gen = gs.gens[static_cast<std::size_t>(k)];
    Weight v = residual;
    for (long long m = 0;; ++m) {
      if (!ok(v)) break;  // prunes are monotone along repeated subtraction
      self(self, k - 1, v, exp_acc + m * gen.qexp);
      v -= gen.v;
    }
  };
  go(go, static_cast<int>(gs.gens.size()) - 1, beta, 0);
  return acc;
}

}  // namespace branchq
