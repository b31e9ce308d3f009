#pragma once
// Deterministic parallel reduction over an index range. The map results are
// exact integer polynomials and addition is commutative and associative, so
// any thread schedule produces the same sum; partials are still merged in
// thread order for good measure.

#include "branchq/qpoly.hpp"

#include <cstdint>
#include <thread>
#include <vector>

namespace branchq {

// Sums fn(i) for i in [0, count). fn must be safe to call concurrently.
template <typename Fn>
QPoly parallel_poly_sum(std::uint64_t count, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2) {
    QPoly acc;
    for (std::uint64_t i = 0; i < count; ++i) acc += fn(i);
    return acc;
  }
  const int threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), count));
  std::vector<QPoly> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      QPoly local;
      for (std::uint64_t i = static_cast<std::uint64_t>(t); i < count; i += static_cast<std::uint64_t>(threads)) {
        local += fn(i);
      }
      partial[static_cast<std::size_t>(t)] = std::move(local);
    });
  }
  for (auto& th : pool) th.join();
  QPoly acc;
  for (int t = 0; t < threads; ++t) acc += partial[static_cast<std::size_t>(t)];
  return acc;
}

}  // namespace branchq
