#pragma once
// Enumeration helpers for partitions, compositions, and bounded weakly
// decreasing integer vectors.

#include "branchq/weight.hpp"

#include <algorithm>
#include <vector>

namespace branchq {

using Partition = std::vector<Int>;  // weakly decreasing, positive parts only

inline Int partition_size(const Partition& p) {
  Int s = 0;
  for (Int x : p) s += x;
  return s;
}

// True when p is weakly decreasing with nonnegative entries (trailing zeros
// are allowed).
inline bool is_partition_vector(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

// All partitions with at most max_len parts, each part <= max_part, and total
// size <= max_total. Includes the empty partition. Deterministic order:
// increasing size, then lexicographically decreasing within a size.
inline std::vector<Partition> partitions_up_to(Int max_total, int max_len, Int max_part = -1) {
  if (max_part < 0) max_part = max_total;
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, Int remaining, Int cap) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (Int part = std::min(cap, remaining); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, std::min(max_total, max_part * static_cast<Int>(max_len)), max_part);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    Int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa < sb;
    return a > b;  // lexicographically larger first within a size
  });
  return out;
}

// All partitions of exactly `total` with at most max_len parts, each <= max_part.
inline std::vector<Partition> partitions_of(Int total, int max_len, Int max_part = -1) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(total, max_len, max_part)) {
    if (partition_size(p) == total) out.push_back(p);
  }
  return out;
}

// Ordered sequences of positive integers summing to n.
inline std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// Conjugate (transpose) partition.
inline Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (Int col = 1; col <= p[0]; ++col) {
    Int rows = 0;
    for (Int part : p) if (part >= col) ++rows;
    out.push_back(rows);
  }
  return out;
}

// Every part even (the transpose has all column lengths even in pairs).
inline bool all_parts_even(const Partition& p) {
  for (Int x : p) if (x % 2 != 0) return false;
  return true;
}

// Every column length even, i.e. parts come in equal pairs
// (p_1=p_2, p_3=p_4, ...).
inline bool all_columns_even(const Partition& p) {
  if (p.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
    if (p[i] != p[i + 1]) return false;
  }
  return true;
}

// Partition padded with zeros to a weight of length n. Throws if it does not fit.
inline Weight pad_to_weight(const Partition& p, int n) {
  if (static_cast<int>(p.size()) > n) throw std::invalid_argument("pad_to_weight: partition longer than rank");
  Weight w(n);
  for (std::size_t i = 0; i < p.size(); ++i) w[static_cast<int>(i)] = p[i];
  return w;
}

// Drops trailing zeros of a weakly decreasing nonnegative weight.
inline Partition weight_to_partition(const Weight& w) {
  if (!w.is_partition()) throw std::invalid_argument("weight_to_partition: not a partition");
  Partition p;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == 0) break;
    p.push_back(w[i]);
  }
  return p;
}

// Concatenates per-block partitions (padded with zeros to their block sizes)
// into one flat weight of length sum(blocks).
inline Weight flat_weight(const std::vector<int>& blocks, const std::vector<Partition>& parts) {
  if (blocks.size() != parts.size()) throw std::invalid_argument("flat_weight: block count mismatch");
  int n = 0;
  for (int b : blocks) n += b;
  Weight w(n);
  int at = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (static_cast<int>(parts[k].size()) > blocks[k]) {
      throw std::invalid_argument("flat_weight: block entry longer than its block");
    }
    for (std::size_t i = 0; i < parts[k].size(); ++i) w[at + static_cast<int>(i)] = parts[k][i];
    at += blocks[k];
  }
  return w;
}

// Splits a flat weight into consecutive blocks of the given sizes.
inline std::vector<std::vector<Int>> split_blocks(const Weight& w, const std::vector<int>& blocks) {
  std::vector<std::vector<Int>> out;
  int at = 0;
  for (int b : blocks) {
    std::vector<Int> blk;
    for (int i = 0; i < b; ++i) blk.push_back(w[at + i]);
    at += b;
    out.push_back(std::move(blk));
  }
  if (at != w.size()) throw std::invalid_argument("split_blocks: sizes do not sum to length");
  return out;
}

// Weakly decreasing integer vectors of length n with entries in [lo, hi] and
// prescribed total. Deterministic lexicographic order.
inline std::vector<Weight> decreasing_vectors(int n, Int total, Int lo, Int hi) {
  std::vector<Weight> out;
  Weight cur(n);
  auto rec = [&](auto&& self, int i, Int remaining, Int cap) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int left = n - i;
    for (Int v = std::min(cap, remaining - lo * (left - 1)); v >= lo; --v) {
      // Remaining coordinates are each <= v and >= lo.
      if (remaining - v > v * (left - 1) || remaining - v < lo * (left - 1)) continue;
      cur[i] = v;
      self(self, i + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, hi);
  return out;
}

}  // namespace branchq
