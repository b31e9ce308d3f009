#pragma once
// Tensor-side coefficients: quantized analogues of tensor-product
// multiplicities through block partition functions, the box-complement lift
// that turns them into branching data, and the three-way grading identity.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "branchq/partitions.hpp"
#include "branchq/q_analogue.hpp"
#include "branchq/q_partition.hpp"
#include "branchq/qpoly.hpp"
#include "branchq/root_data.hpp"
#include "branchq/weight.hpp"
#include "branchq/weyl_group.hpp"

namespace branchq {

// Simple-root indices of the block Levi GL_eta inside GL_n: every i whose
// coordinates i and i+1 lie in the same block.
inline std::vector<int> eta_levi(int n, const std::vector<int>& eta) {
  const auto blk = detail::block_of(n, eta);
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (blk[static_cast<std::size_t>(i - 1)] == blk[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

namespace detail {

inline void check_tensor_inputs(int n, const std::vector<int>& eta, const Weight& lambda,
                                const std::vector<Partition>& parts, const char* where) {
  validate_blocks(n, eta);
  if (lambda.size() != n || !lambda.is_partition())
    throw std::invalid_argument(std::string(where) + ": lambda must be a partition of length rank");
  if (parts.size() != eta.size())
    throw std::invalid_argument(std::string(where) + ": one partition per block required");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!is_partition_vector(parts[k]))
      throw std::invalid_argument(std::string(where) + ": block entries must be partitions");
    if (static_cast<int>(parts[k].size()) > eta[k])
      throw std::invalid_argument(std::string(where) + ": block entry longer than its block");
  }
}

}  // namespace detail

// q-analogue of the block tensor multiplicity for GL_n: the branching
// polynomial of the pair (GL_n, GL_eta).
inline QPoly c_poly(int n, const std::vector<int>& eta, const Weight& lambda,
                    const std::vector<Partition>& parts, const EvalContext& ctx = {}) {
  detail::check_tensor_inputs(n, eta, lambda, parts, "c_poly");
  return k_poly(GroupSpec{Family::GL, n}, eta_levi(n, eta), lambda, flat_weight(eta, parts),
                Variant::Standard, ctx);
}

// Signed symmetric-group sum against the two-sided block partition function
// (cross-block differences and negated cross-block sums): the group-free
// q-analogue of the tensor multiplicity. May have negative coefficients.
inline QPoly d_poly(int n, const std::vector<int>& eta, const Weight& lambda,
                    const std::vector<Partition>& parts, const EvalContext& ctx = {}) {
  detail::check_tensor_inputs(n, eta, lambda, parts, "d_poly");
  QCounter counter(q_eta_generators(n, eta), ctx.memo_entries);
  return detail::symmetric_alternating_sum(n, counter, lambda, flat_weight(eta, parts), ctx.jobs);
}

// The same sum at q = 1.
inline BigInt d_coeff(int n, const std::vector<int>& eta, const Weight& lambda,
                      const std::vector<Partition>& parts, const EvalContext& ctx = {}) {
  return d_poly(n, eta, lambda, parts, ctx).eval_one();
}

// Multiplicity of the block weight mu in the restriction of the even
// orthogonal irreducible with highest weight lambda to the block subgroup
// SO_{2 eta_1} x ... x SO_{2 eta_r}.
inline BigInt branch_so_eta(int n, const std::vector<int>& eta, const Weight& lambda,
                            const Weight& mu_flat, const EvalContext& ctx = {}) {
  detail::validate_blocks(n, eta);
  const GroupSpec ambient{Family::SOeven, n};
  detail::check_dominant(ambient, lambda, "branch_so_eta");
  if (mu_flat.size() != n)
    throw std::invalid_argument("branch_so_eta: weight size must equal the rank");
  QCounter counter(p_eta_generators(n, eta), ctx.memo_entries);
  return detail::alternating_sum(ambient, counter, lambda, mu_flat, ctx.jobs).eval_one();
}

struct HatPair {
  Weight lambda_hat;         // box complement of lambda
  Weight mu_hat;             // blockwise box complements, blocks reversed
  Int a = 0;                 // box height
  std::vector<int> eta_bar;  // reversed block sizes
};

// Box-complement lift: with a the smallest box height containing lambda and
// every block entry, reverse-negate-shift lambda, and complement each block
// inside its own box, listing the complemented blocks in reversed order.
inline HatPair make_hat_pair(int n, const std::vector<int>& eta, const Weight& lambda,
                             const std::vector<Partition>& parts) {
  detail::check_tensor_inputs(n, eta, lambda, parts, "make_hat_pair");
  Int a = lambda[0];
  for (const auto& p : parts)
    for (Int v : p) a = std::max(a, v);
  HatPair out;
  out.a = a;
  out.eta_bar.assign(eta.rbegin(), eta.rend());
  out.lambda_hat = lambda.reversed_negated().plus_constant(a);
  Weight mu_hat(n);
  int at = 0;
  for (std::size_t k = parts.size(); k-- > 0;) {
    const Weight hat = pad_to_weight(parts[k], eta[k]).reversed_negated().plus_constant(a);
    if (!hat.is_partition()) throw std::logic_error("make_hat_pair: block complement not a partition");
    for (int i = 0; i < eta[k]; ++i) mu_hat[at + i] = hat[i];
    at += eta[k];
  }
  out.mu_hat = mu_hat;
  return out;
}

struct DualityD {
  BigInt tensor_side;     // signed block sum at q = 1
  BigInt branching_side;  // block orthogonal restriction of the lifted pair
  bool matched = false;
};

// Integer duality: the signed block sum equals the block orthogonal
// branching coefficient of the box-complement lift, translated far enough
// into the dominant cone. Any k >= (|mu| - |lambda|) / 2 gives the same
// branching value; `extra` adds to the minimal choice.
inline DualityD duality_d_check(int n, const std::vector<int>& eta, const Weight& lambda,
                                const std::vector<Partition>& parts, Int extra = 0,
                                const EvalContext& ctx = {}) {
  DualityD out;
  out.tensor_side = d_coeff(n, eta, lambda, parts, ctx);
  const HatPair hat = make_hat_pair(n, eta, lambda, parts);
  const Int diff = flat_weight(eta, parts).total() - lambda.total();
  const Int k = (diff > 0 ? (diff + 1) / 2 : 0) + extra;
  out.branching_side = branch_so_eta(n, hat.eta_bar, hat.lambda_hat.plus_constant(k),
                                     hat.mu_hat.plus_constant(k), ctx);
  out.matched = out.tensor_side == out.branching_side;
  return out;
}

// Group-dependent q-analogue of the tensor multiplicity: signed
// symmetric-group sum against the family's deformed block partition
// function. The odd orthogonal family is graded in t = q^(1/2).
inline QPoly dfrak_poly(const GroupSpec& g, const std::vector<int>& eta, const Weight& lambda,
                        const std::vector<Partition>& parts, const EvalContext& ctx = {}) {
  if (g.family == Family::GL) throw std::invalid_argument("dfrak_poly: non-GL families only");
  detail::check_tensor_inputs(g.rank, eta, lambda, parts, "dfrak_poly");
  QCounter counter(qfrak_generators(g, eta), ctx.memo_entries);
  return detail::symmetric_alternating_sum(g.rank, counter, lambda, flat_weight(eta, parts),
                                           ctx.jobs);
}

// The family whose lifted branching data carries the tensor grading: the
// symplectic and even orthogonal families exchange, the odd orthogonal
// family is self-paired.
inline Family dual_family(Family f) {
  switch (f) {
    case Family::Sp: return Family::SOeven;
    case Family::SOeven: return Family::Sp;
    case Family::SOodd: return Family::SOodd;
    case Family::GL: break;
  }
  throw std::invalid_argument("dual_family: non-GL families only");
}

// Third form of the grading identity: branching-weighted sum of GL
// polynomials over partitions nu with |nu| = |mu|,
//   shift * sum_nu [nu : lambda] * K(GL_n, I(levi_blocks); nu, mu)
// where [nu : lambda] is the multiplicity of the polynomial GL_n weight
// lambda in the restriction of the dual-family irreducible with highest
// weight nu, and shift = q^{(|mu|-|lambda|)/2} — in the odd orthogonal
// family t^{|mu|-|lambda|}, with the GL polynomial re-graded by q -> t^2.
// The identity closes with levi_blocks = eta; passing the reversed pattern
// is supported for experiments. lr_route switches the branching factor to
// the Littlewood-Richardson computation.
inline QPoly nu_sum_poly(const GroupSpec& g, const std::vector<int>& eta, const Weight& lambda,
                         const std::vector<Partition>& parts, const std::vector<int>& levi_blocks,
                         bool lr_route = false, const EvalContext& ctx = {}) {
  if (g.family == Family::GL) throw std::invalid_argument("nu_sum_poly: non-GL families only");
  const int n = g.rank;
  detail::check_tensor_inputs(n, eta, lambda, parts, "nu_sum_poly");
  const Weight mu = flat_weight(eta, parts);
  const GroupSpec ghat{dual_family(g.family), n};
  const GroupSpec gl{Family::GL, n};
  const Partition lambda_p = weight_to_partition(lambda);
  QCounter branch_counter(sgi_generators(ghat, gl_levi_indices(ghat)), ctx.memo_entries);
  QCounter gl_counter(sgi_generators(gl, eta_levi(n, levi_blocks)), ctx.memo_entries);
  QPoly sum;
  for (const Partition& nu : partitions_of(mu.total(), n)) {
    const Weight nu_w = pad_to_weight(nu, n);
    const BigInt b =
        lr_route ? branch_gln_lr(ghat, nu_w, lambda_p, Partition{})
                 : detail::alternating_sum(ghat, branch_counter, nu_w, lambda, ctx.jobs).eval_one();
    if (b == 0) continue;
    QPoly kq = detail::symmetric_alternating_sum(n, gl_counter, nu_w, mu, ctx.jobs);
    if (kq.is_zero()) continue;
    if (g.family == Family::SOodd) kq = kq.stretched(2);
    sum += kq.scaled(b);
  }
  if (!sum.is_zero()) {
    const Int diff = mu.total() - lambda.total();
    if (g.family == Family::SOodd) {
      sum = sum.shifted(static_cast<int>(diff));
    } else {
      if (diff % 2 != 0) throw std::logic_error("nu_sum_poly: odd grading offset with nonzero sum");
      sum = sum.shifted(static_cast<int>(diff / 2));
    }
  }
  return sum;
}

struct QDuality {
  QPoly tensor_poly;  // signed deformed block sum
  QPoly stable_poly;  // stable branching polynomial of the lifted pair
  QPoly nu_sum;       // branching-weighted sum of GL polynomials
  bool three_way = false;
};

// Three-way grading identity: the deformed tensor polynomial, the stable
// branching polynomial of the box-complement lift (dual family, reversed
// blocks), and the branching-weighted GL sum with the original block
// pattern coincide.
inline QDuality qdual_check(const GroupSpec& g, const std::vector<int>& eta, const Weight& lambda,
                            const std::vector<Partition>& parts, const EvalContext& ctx = {}) {
  QDuality out;
  out.tensor_poly = dfrak_poly(g, eta, lambda, parts, ctx);
  const HatPair hat = make_hat_pair(g.rank, eta, lambda, parts);
  const GroupSpec ghat{dual_family(g.family), g.rank};
  out.stable_poly = k_tilde(ghat, eta_levi(g.rank, hat.eta_bar), hat.lambda_hat, hat.mu_hat, ctx);
  out.nu_sum = nu_sum_poly(g, eta, lambda, parts, eta, false, ctx);
  out.three_way = out.tensor_poly == out.stable_poly && out.stable_poly == out.nu_sum;
  return out;
}

}  // namespace branchq
