#pragma once
// Tableau combinatorics used as independent oracles: Littlewood-Richardson
// coefficients by enumerating lattice skew semistandard fillings, and the
// charge statistic giving Kostka-Foulkes polynomials.

#include "branchq/partitions.hpp"
#include "branchq/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace branchq {

// Number of semistandard fillings of the skew shape nu/gamma with content
// delta whose reverse reading word (rows top to bottom, each right to left)
// is a lattice word. Zero when the shapes or sizes are incompatible.
inline BigInt lr_coeff(const Partition& nu, const Partition& gamma, const Partition& delta) {
  if (partition_size(nu) != partition_size(gamma) + partition_size(delta)) return 0;
  const int rows = static_cast<int>(nu.size());
  auto outer = [&](int r) { return r < rows ? nu[static_cast<std::size_t>(r)] : Int(0); };
  auto inner = [&](int r) { return r < static_cast<int>(gamma.size()) ? gamma[static_cast<std::size_t>(r)] : Int(0); };
  for (int r = 0; r < rows; ++r)
    if (inner(r) > outer(r)) return 0;
  if (rows == 0) return 1;  // sizes matched, so delta is empty too

  const int letters = static_cast<int>(delta.size());
  std::vector<std::vector<int>> cell(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) cell[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer(r)), 0);
  std::vector<Int> remaining(delta.begin(), delta.end());
  std::vector<Int> placed(static_cast<std::size_t>(letters), 0);  // lattice prefix counts
  auto entry = [&](int r, Int c) -> int& { return cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };

  BigInt total = 0;
  // Fill in reverse reading order (row by row, right to left): the lattice
  // prefix condition can then be checked per placement, and the row/column
  // constraints compare against already-filled neighbours.
  auto rec = [&](auto&& self, int r, Int c) -> void {
    if (r == rows) {
      total += 1;
      return;
    }
    if (c < inner(r)) {  // row exhausted (or has no skew cells)
      self(self, r + 1, r + 1 < rows ? outer(r + 1) - 1 : Int(-1));
      return;
    }
    for (int x = 1; x <= letters; ++x) {
      if (remaining[static_cast<std::size_t>(x - 1)] == 0) continue;
      // Lattice: after placing x, #x must not exceed #(x-1).
      if (x > 1 && placed[static_cast<std::size_t>(x - 1)] + 1 > placed[static_cast<std::size_t>(x - 2)]) continue;
      // Row weakly increases left to right; the right neighbour is filled.
      if (c + 1 < outer(r) && x > entry(r, c + 1)) continue;
      // Column strictly increases downwards; cells above the inner shape are
      // empty and impose nothing.
      if (r > 0 && c >= inner(r - 1) && x <= entry(r - 1, c)) continue;
      entry(r, c) = x;
      remaining[static_cast<std::size_t>(x - 1)] -= 1;
      placed[static_cast<std::size_t>(x - 1)] += 1;
      self(self, r, c - 1);
      remaining[static_cast<std::size_t>(x - 1)] += 1;
      placed[static_cast<std::size_t>(x - 1)] -= 1;
      entry(r, c) = 0;
    }
  };
  rec(rec, 0, outer(0) - 1);
  return total;
}

// All semistandard tableaux of shape lambda and content mu, reported as their
// row reading words (rows listed bottom to top, each left to right).
inline void for_each_ssyt_word(const Partition& lambda, const Partition& mu,
                               const std::function<void(const std::vector<int>&)>& fn) {
  const int rows = static_cast<int>(lambda.size());
  const int letters = static_cast<int>(mu.size());
  std::vector<std::vector<int>> cell(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) cell[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::vector<Int> remaining(mu.begin(), mu.end());

  auto emit = [&]() {
    std::vector<int> word;
    for (int r = rows - 1; r >= 0; --r)
      for (int v : cell[static_cast<std::size_t>(r)]) word.push_back(v);
    fn(word);
  };

  // Fill row-major, left to right; constraints look up and left.
  auto rec = [&](auto&& self, int r, Int c) -> void {
    if (r == rows) {
      emit();
      return;
    }
    if (c == lambda[static_cast<std::size_t>(r)]) {
      self(self, r + 1, 0);
      return;
    }
    for (int x = 1; x <= letters; ++x) {
      if (remaining[static_cast<std::size_t>(x - 1)] == 0) continue;
      if (c > 0 && x < cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]) continue;
      if (r > 0 && c < lambda[static_cast<std::size_t>(r - 1)] && x <= cell[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])
        continue;
      cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
      remaining[static_cast<std::size_t>(x - 1)] -= 1;
      self(self, r, c + 1);
      remaining[static_cast<std::size_t>(x - 1)] += 1;
      cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
  };
  if (rows == 0) {
    if (partition_size(mu) == 0) emit();
    return;
  }
  rec(rec, 0, 0);
}

// Charge of a word with partition content: repeatedly extract a standard
// subword (find the rightmost 1, then each next letter scanning leftward,
// wrapping around to the rightmost occurrence when needed), score it by the
// index rule, remove it, and repeat on what is left.
inline long long charge(std::vector<int> word) {
  long long total = 0;
  while (!word.empty()) {
    int max_letter = *std::max_element(word.begin(), word.end());
    std::vector<std::size_t> picked;
    std::size_t pos = word.size();
    for (std::size_t i = word.size(); i-- > 0;) {
      if (word[i] == 1) {
        pos = i;
        break;
      }
    }
    if (pos == word.size()) throw std::logic_error("charge: content is not a partition");
    picked.push_back(pos);
    for (int r = 2; r <= max_letter; ++r) {
      std::size_t next = word.size();
      for (std::size_t i = pos; i-- > 0;) {  // nearest strictly to the left
        if (word[i] == r) {
          next = i;
          break;
        }
      }
      if (next == word.size()) {
        for (std::size_t i = word.size(); i-- > 0;) {  // wraparound: rightmost
          if (word[i] == r) {
            next = i;
            break;
          }
        }
      }
      if (next == word.size()) break;  // letter absent: the subword stops here
      picked.push_back(next);
      pos = next;
    }
    // Score the standard subword in original order: index(1) = 0 and index(r)
    // increments exactly when r sits to the right of r-1.
    std::vector<std::size_t> sorted = picked;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> rank_of(picked.size() + 1, 0);  // letter -> rank in subword
    for (std::size_t i = 0; i < sorted.size(); ++i) rank_of[static_cast<std::size_t>(word[sorted[i]])] = i;
    long long index = 0;
    for (std::size_t r = 2; r <= picked.size(); ++r) {
      if (rank_of[r] > rank_of[r - 1]) ++index;
      total += index;
    }
    std::vector<int> rest;
    rest.reserve(word.size() - picked.size());
    std::vector<bool> take(word.size(), false);
    for (std::size_t p : picked) take[p] = true;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!take[i]) rest.push_back(word[i]);
    word.swap(rest);
  }
  return total;
}

// Kostka-Foulkes polynomial via the charge statistic over semistandard
// tableaux of shape lambda and content mu.
inline QPoly kostka_charge(const Partition& lambda, const Partition& mu) {
  if (partition_size(lambda) != partition_size(mu)) return QPoly();
  QPoly out;
  for_each_ssyt_word(lambda, mu, [&](const std::vector<int>& word) {
    out.add_term(static_cast<int>(charge(word)), 1);
  });
  return out;
}

// Multiplicities of each partition (length <= max_len) in the Schur expansion
// of acc * s_beta, where acc maps partitions to multiplicities.
inline std::map<Partition, BigInt> lr_multiply(const std::map<Partition, BigInt>& acc, const Partition& beta,
                                               int max_len) {
  std::map<Partition, BigInt> out;
  for (const auto& [alpha, mult] : acc) {
    Int target = partition_size(alpha) + partition_size(beta);
    Int max_part = (alpha.empty() ? 0 : alpha[0]) + (beta.empty() ? 0 : beta[0]);
    for (const auto& nu : partitions_of(target, max_len, max_part)) {
      BigInt c = lr_coeff(nu, alpha, beta);
      if (c != 0) out[nu] += mult * c;
    }
  }
  return out;
}

}  // namespace branchq
