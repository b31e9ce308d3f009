#pragma once
// Command-line surface: single-polynomial queries (kpoly, tensor), identity
// verification drivers (verify), conjecture scans (scan), and the symplectic
// rank-4 reference table (reproduce sp8-table). The identity drivers are
// plain functions so test binaries can run them in-process.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "q_analogue.hpp"
#include "tableaux.hpp"
#include "tensor_q.hpp"

namespace branchq {

using ordered_json = nlohmann::ordered_json;

// Invalid command-line input (maps to exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

// ---------------------------------------------------------------- parsing

inline std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": cannot parse integer '" + item + "'");
    }
  }
  if (!s.empty() && s.back() == ',') throw UsageError(std::string(what) + ": trailing comma");
  return out;
}

inline Weight weight_from(const std::vector<Int>& v, int rank, const char* what) {
  if (static_cast<int>(v.size()) != rank)
    throw UsageError(std::string(what) + " has length " + std::to_string(v.size()) +
                     ", expected the rank " + std::to_string(rank));
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = v[static_cast<std::size_t>(i)];
  return w;
}

// Levi flag: "none", "all", or comma-separated simple-root labels "a1,a3".
inline std::vector<int> parse_levi(const GroupSpec& g, const std::string& s) {
  if (s == "none" || s.empty()) return {};
  if (s == "all") return all_simple_indices(g);
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  const int m = num_simple_roots(g);
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || item[0] != 'a')
      throw UsageError("--levi: expected labels a1..a" + std::to_string(m) + ", got '" + item + "'");
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(item.substr(1), &used);
      if (used + 1 != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--levi: cannot parse label '" + item + "'");
    }
    if (idx < 1 || idx > m)
      throw UsageError("--levi: label " + item + " outside a1..a" + std::to_string(m));
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Block list: ";" between blocks, "," within. "5;4,4;2,2" -> {(5),(4,4),(2,2)}.
inline std::vector<Partition> parse_blocks(const std::string& s) {
  std::vector<Partition> out;
  std::string rest = s;
  std::size_t at = 0;
  while (true) {
    const std::size_t semi = rest.find(';', at);
    const std::string piece = rest.substr(at, semi == std::string::npos ? std::string::npos : semi - at);
    Partition p;
    for (Int v : parse_int_list(piece, "--blocks")) p.push_back(v);
    if (!is_partition_vector(p)) throw UsageError("--blocks: block '" + piece + "' is not a partition");
    out.push_back(std::move(p));
    if (semi == std::string::npos) break;
    at = semi + 1;
  }
  return out;
}

inline std::vector<int> parse_eta(const std::string& s) {
  std::vector<int> eta;
  for (Int v : parse_int_list(s, "--eta")) {
    if (v < 1) throw UsageError("--eta: block sizes must be positive");
    eta.push_back(static_cast<int>(v));
  }
  if (eta.empty()) throw UsageError("--eta: at least one block required");
  return eta;
}

inline Family parse_family_arg(const std::string& s) {
  const auto f = parse_family(s);
  if (!f) throw UsageError("--group: unknown group '" + s + "' (gl|so-odd|sp|so-even)");
  return *f;
}

// -------------------------------------------------------------- rendering

inline ordered_json poly_to_json(const QPoly& p) {
  ordered_json jp = ordered_json::object();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    jp[std::to_string(it->first)] = it->second.str();
  return jp;
}

inline ordered_json weight_to_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < w.size(); ++i) a.push_back(static_cast<std::int64_t>(w[i]));
  return a;
}

inline std::string join_ints(const std::vector<Int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

inline std::string weight_cell(const Weight& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

inline std::string levi_label(const std::vector<int>& I) {
  if (I.empty()) return "none";
  std::ostringstream os;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) os << ',';
    os << 'a' << I[k];
  }
  return os.str();
}

inline std::string levi_cell(const std::vector<int>& I) {
  if (I.empty()) return "-";
  std::ostringstream os;
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) os << ' ';
    os << 'a' << I[k];
  }
  return os.str();
}

inline std::string blocks_cell(const std::vector<Partition>& parts, const char* between,
                               const char* within) {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << between;
    os << join_ints(parts[k], within);
  }
  return os.str();
}

// ------------------------------------------------------------ job plumbing

struct GlobalOpts {
  std::string format = "json";  // text|json|csv
  int jobs = 0;                 // 0 = unset (env, then hardware)
  long long memo_entries = -1;  // -1 = unset (env BRANCHQ_MEMO_MB, then default)
  int rank_guard = 8;
};

inline EvalContext make_context(const GlobalOpts& g) {
  EvalContext ctx;
  int jobs = g.jobs;
  if (jobs <= 0) {
    if (const char* env = std::getenv("BRANCHQ_JOBS")) {
      try {
        jobs = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError("BRANCHQ_JOBS: cannot parse worker count");
      }
    }
  }
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 0) jobs = 1;
  ctx.jobs = jobs;
  if (g.memo_entries >= 0) {
    ctx.memo_entries = static_cast<std::size_t>(g.memo_entries);
  } else if (const char* env = std::getenv("BRANCHQ_MEMO_MB")) {
    long long mb = 0;
    try {
      mb = std::stoll(env);
    } catch (const std::exception&) {
      throw UsageError("BRANCHQ_MEMO_MB: cannot parse cache size");
    }
    if (mb < 0) mb = 0;
    // ~256 bytes per cached (target, polynomial) entry.
    ctx.memo_entries = static_cast<std::size_t>(mb) * 4096u;
  }
  return ctx;
}

inline void check_guard(const GroupSpec& g, int guard) {
  if (g.rank < 1) throw UsageError("--rank must be at least 1");
  if (g.rank > guard)
    throw UsageError("rank " + std::to_string(g.rank) + " exceeds the rank guard (" +
                     std::to_string(guard) + "); raise it with --rank-guard");
  check_rank(g);  // hard capacity cap
}

}  // namespace cli_detail

// ======================================================================
// Identity drivers, shared by the verify subcommand and the test suites.
// ======================================================================

// Collects equality checks; --perturb corrupts the first comparison so the
// reporting machinery can be exercised end to end.
struct Checker {
  long long checked = 0;
  std::vector<std::string> violations;
  bool perturb = false;

  void poly_eq(QPoly lhs, const QPoly& rhs, const std::string& inst, const char* lname,
               const char* rname) {
    if (perturb && checked == 0) lhs += QPoly::monomial(0, 1);
    ++checked;
    if (lhs != rhs)
      violations.push_back(inst + "  " + lname + "=" + lhs.str() + "  " + rname + "=" + rhs.str());
  }

  void int_eq(BigInt lhs, const BigInt& rhs, const std::string& inst, const char* lname,
              const char* rname) {
    if (perturb && checked == 0) lhs += 1;
    ++checked;
    if (lhs != rhs)
      violations.push_back(inst + "  " + lname + "=" + lhs.str() + "  " + rname + "=" + rhs.str());
  }

  void three_eq(QPoly a, const QPoly& b, const QPoly& c, const std::string& inst) {
    if (perturb && checked == 0) a += QPoly::monomial(0, 1);
    ++checked;
    if (!(a == b && b == c))
      violations.push_back(inst + "  signed-sum=" + a.str() + "  stable=" + b.str() +
                           "  weighted-gl-sum=" + c.str());
  }
};

namespace drivers {

// ---- stable-shift: the stable limit equals the kappa-translated full sum
// for every k >= ceil((|lambda|-|mu|)/2), checked at the threshold and one
// step above it.

inline void stable_shift_instance(Checker& ck, const GroupSpec& g, const std::vector<int>& I,
                                  const Weight& lambda, const Weight& mu, Int k,
                                  const EvalContext& ctx) {
  const Variant v = g.family == Family::SOodd ? Variant::H : Variant::Standard;
  const QPoly lhs = k_tilde(g, I, lambda, mu, ctx);
  const QPoly rhs = k_poly(g, I, lambda.plus_constant(k), mu.plus_constant(k), v, ctx);
  std::ostringstream inst;
  inst << "stable-shift " << family_code(g.family) << " rank=" << g.rank
       << " levi=" << cli_detail::levi_label(I) << " lambda=" << lambda.str()
       << " mu=" << mu.str() << " k=" << k;
  ck.poly_eq(lhs, rhs, inst.str(), "stable", "translated");
}

inline void stable_shift_pair(Checker& ck, const GroupSpec& g, const std::vector<int>& I,
                              const Weight& lambda, const Weight& mu, const EvalContext& ctx) {
  const Int diff = lambda.total() - mu.total();
  const Int k0 = diff > 0 ? (diff + 1) / 2 : 0;
  stable_shift_instance(ck, g, I, lambda, mu, k0, ctx);
  stable_shift_instance(ck, g, I, lambda, mu, k0 + 1, ctx);
}

inline void stable_shift_exhaustive(Checker& ck, const GroupSpec& g, Int max_weight,
                                    const EvalContext& ctx) {
  const int n = g.rank;
  const auto lambdas = partitions_up_to(max_weight, n);
  for (const auto& I : all_levi_subsets(g)) {
    for (const Partition& lp : lambdas) {
      const Weight lambda = pad_to_weight(lp, n);
      for (const Partition& mp : partitions_up_to(lambda.total(), n)) {
        stable_shift_pair(ck, g, I, lambda, pad_to_weight(mp, n), ctx);
      }
    }
  }
}

inline void stable_shift_random(Checker& ck, const std::vector<Family>& fams, int max_rank,
                                Int max_weight, int count, std::uint64_t seed,
                                const EvalContext& ctx) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const Family f = fams[rng() % fams.size()];
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    const GroupSpec g{f, n};
    const auto subsets = all_levi_subsets(g);
    const auto& I = subsets[rng() % subsets.size()];
    const auto lambdas = partitions_up_to(max_weight, n);
    const Weight lambda = pad_to_weight(lambdas[rng() % lambdas.size()], n);
    const auto mus = partitions_up_to(lambda.total(), n);
    const Weight mu = pad_to_weight(mus[rng() % mus.size()], n);
    stable_shift_pair(ck, g, I, lambda, mu, ctx);
  }
}

// ---- dec-k-c: the stable limit decomposes through the diagonal GL_n.

inline void dec_k_c_instance(Checker& ck, const GroupSpec& g, const std::vector<int>& I,
                             const Weight& lambda, const Weight& mu, const EvalContext& ctx) {
  const StableDecomposition r = stable_decomposition_check(g, I, lambda, mu, ctx);
  std::ostringstream inst;
  inst << "dec-k-c " << family_code(g.family) << " rank=" << g.rank
       << " levi=" << cli_detail::levi_label(I) << " lambda=" << lambda.str()
       << " mu=" << mu.str();
  ck.poly_eq(r.lhs, r.rhs, inst.str(), "stable", "decomposed");
}

inline void dec_k_c_exhaustive(Checker& ck, const GroupSpec& g, Int max_lambda,
                               const EvalContext& ctx) {
  const int n = g.rank;
  for (const auto& I : all_levi_subsets(g)) {
    if (std::find(I.begin(), I.end(), n) != I.end()) continue;  // GL-type Levis only
    for (const Partition& lp : partitions_up_to(max_lambda, n)) {
      const Weight lambda = pad_to_weight(lp, n);
      // All totals <= |lambda|; parity-violating totals must give 0 = 0.
      for (const Partition& mp : partitions_up_to(lambda.total(), n)) {
        dec_k_c_instance(ck, g, I, lambda, pad_to_weight(mp, n), ctx);
      }
    }
  }
}

inline void dec_k_c_random(Checker& ck, const std::vector<Family>& fams, int max_rank,
                           Int max_weight, int count, std::uint64_t seed, const EvalContext& ctx) {
  std::mt19937_64 rng(seed);
  int made = 0;
  while (made < count) {
    const Family f = fams[rng() % fams.size()];
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    const GroupSpec g{f, n};
    std::vector<std::vector<int>> subsets;
    for (const auto& I : all_levi_subsets(g))
      if (std::find(I.begin(), I.end(), n) == I.end()) subsets.push_back(I);
    const auto& I = subsets[rng() % subsets.size()];
    const auto lambdas = partitions_up_to(max_weight, n);
    const Weight lambda = pad_to_weight(lambdas[rng() % lambdas.size()], n);
    const auto mus = partitions_up_to(lambda.total(), n);
    const Weight mu = pad_to_weight(mus[rng() % mus.size()], n);
    dec_k_c_instance(ck, g, I, lambda, mu, ctx);
    ++made;
  }
}

// ---- mul-sum: the alternating diagonal-restriction formula against the
// tableau route (polynomial weights agree; mixed rational weights are known
// to diverge outside the stable range and are reported, not patched).

struct MulSumTally {
  long long polynomial_checked = 0;
  long long polynomial_bad = 0;
  long long rational_checked = 0;
  long long rational_bad = 0;
};

inline void mul_sum_instance(Checker& ck, const GroupSpec& g, const Weight& nu,
                             const Partition& plus, const Partition& minus,
                             const EvalContext& ctx, MulSumTally* tally = nullptr) {
  const BigInt alt = branch_gln(g, nu, plus, minus, ctx);
  const BigInt lr = branch_gln_lr(g, nu, plus, minus);
  std::ostringstream inst;
  inst << "mul-sum " << family_code(g.family) << " rank=" << g.rank << " nu=" << nu.str()
       << " plus=(" << cli_detail::join_ints(plus, ",") << ") minus=("
       << cli_detail::join_ints(minus, ",") << ")";
  const std::size_t before = ck.violations.size();
  ck.int_eq(alt, lr, inst.str(), "alternating", "tableau");
  if (tally) {
    const bool bad = ck.violations.size() > before;
    if (minus.empty()) {
      ++tally->polynomial_checked;
      if (bad) ++tally->polynomial_bad;
    } else {
      ++tally->rational_checked;
      if (bad) ++tally->rational_bad;
    }
  }
}

inline void mul_sum_exhaustive(Checker& ck, const GroupSpec& g, Int max_nu, const EvalContext& ctx,
                               MulSumTally* tally = nullptr) {
  const int n = g.rank;
  for (const Partition& np : partitions_up_to(max_nu, n)) {
    const Weight nu = pad_to_weight(np, n);
    const Int top = np.empty() ? 0 : np[0];
    for (const Partition& plus : partitions_up_to(nu.total(), n, top)) {
      const int room = n - static_cast<int>(plus.size());
      for (const Partition& minus :
           partitions_up_to(nu.total() - partition_size(plus), room, top)) {
        mul_sum_instance(ck, g, nu, plus, minus, ctx, tally);
      }
    }
  }
}

// ---- block tuples for the tensor identities

inline void for_each_block_tuple(const std::vector<int>& eta, Int total,
                                 const std::function<void(const std::vector<Partition>&)>& fn) {
  std::vector<Partition> acc(eta.size());
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int remaining) {
    if (k + 1 == eta.size()) {
      for (const Partition& p : partitions_of(remaining, eta[k])) {
        acc[k] = p;
        fn(acc);
      }
      return;
    }
    for (Int t = 0; t <= remaining; ++t) {
      for (const Partition& p : partitions_of(t, eta[k])) {
        acc[k] = p;
        rec(k + 1, remaining - t);
      }
    }
  };
  if (eta.empty()) return;
  rec(0, total);
}

// ---- dual-d: signed block sum at q = 1 equals the box-complement branching.

inline void dual_d_instance(Checker& ck, int n, const std::vector<int>& eta, const Weight& lambda,
                            const std::vector<Partition>& parts, Int extra,
                            const EvalContext& ctx) {
  const DualityD r = duality_d_check(n, eta, lambda, parts, extra, ctx);
  std::ostringstream inst;
  inst << "dual-d rank=" << n << " eta=(" << cli_detail::join_ints({eta.begin(), eta.end()}, ",")
       << ") lambda=" << lambda.str() << " blocks=" << cli_detail::blocks_cell(parts, ";", ",")
       << " extra=" << extra;
  ck.int_eq(r.tensor_side, r.branching_side, inst.str(), "signed-sum", "branching");
}

inline void dual_d_exhaustive(Checker& ck, int n, const std::optional<std::vector<int>>& eta_fixed,
                              Int max_weight, const EvalContext& ctx) {
  const std::vector<std::vector<int>> etas =
      eta_fixed ? std::vector<std::vector<int>>{*eta_fixed} : compositions_of(n);
  for (const auto& eta : etas) {
    for (Int total = 0; total <= max_weight; ++total) {
      for_each_block_tuple(eta, total, [&](const std::vector<Partition>& parts) {
        for (const Partition& lp : partitions_up_to(total, n)) {
          dual_d_instance(ck, n, eta, pad_to_weight(lp, n), parts, 0, ctx);
        }
      });
    }
  }
}

// ---- dual-dfrak: the three-way grading identity.

inline void dual_dfrak_instance(Checker& ck, const GroupSpec& g, const std::vector<int>& eta,
                                const Weight& lambda, const std::vector<Partition>& parts,
                                const EvalContext& ctx) {
  const QDuality r = qdual_check(g, eta, lambda, parts, ctx);
  std::ostringstream inst;
  inst << "dual-dfrak " << family_code(g.family) << " rank=" << g.rank << " eta=("
       << cli_detail::join_ints({eta.begin(), eta.end()}, ",") << ") lambda=" << lambda.str()
       << " blocks=" << cli_detail::blocks_cell(parts, ";", ",");
  ck.three_eq(r.tensor_poly, r.stable_poly, r.nu_sum, inst.str());
}

inline void dual_dfrak_exhaustive(Checker& ck, const GroupSpec& g,
                                  const std::optional<std::vector<int>>& eta_fixed, Int max_weight,
                                  const EvalContext& ctx) {
  const int n = g.rank;
  const std::vector<std::vector<int>> etas =
      eta_fixed ? std::vector<std::vector<int>>{*eta_fixed} : compositions_of(n);
  for (const auto& eta : etas) {
    for (Int total = 0; total <= max_weight; ++total) {
      for_each_block_tuple(eta, total, [&](const std::vector<Partition>& parts) {
        for (const Partition& lp : partitions_up_to(total, n)) {
          dual_dfrak_instance(ck, g, eta, pad_to_weight(lp, n), parts, ctx);
        }
      });
    }
  }
}

inline void dual_random(Checker& ck, bool graded, const std::vector<Family>& fams, int max_rank,
                        Int max_weight, int count, std::uint64_t seed, const EvalContext& ctx) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < count; ++t) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    const auto etas = compositions_of(n);
    const auto& eta = etas[rng() % etas.size()];
    const Int total = static_cast<Int>(rng() % static_cast<std::uint64_t>(max_weight + 1));
    std::vector<std::vector<Partition>> tuples;
    for_each_block_tuple(eta, total, [&](const std::vector<Partition>& parts) {
      tuples.push_back(parts);
    });
    const auto& parts = tuples[rng() % tuples.size()];
    const auto lambdas = partitions_up_to(total, n);
    const Weight lambda = pad_to_weight(lambdas[rng() % lambdas.size()], n);
    if (graded) {
      const Family f = fams[rng() % fams.size()];
      dual_dfrak_instance(ck, GroupSpec{f, n}, eta, lambda, parts, ctx);
    } else {
      dual_d_instance(ck, n, eta, lambda, parts, static_cast<Int>(rng() % 2), ctx);
    }
  }
}

// ---- iso-levi: the reference table's equal-polynomials claim. The equality
// is instance-specific (random pairs refute a general law), so only the
// claimed instance is asserted.

inline void iso_levi_instance(Checker& ck, const Weight& lambda, const Weight& mu,
                              const EvalContext& ctx, std::ostream* info) {
  const GroupSpec g{Family::Sp, 4};
  const QPoly a = k_poly(g, {3}, lambda, mu, Variant::Standard, ctx);
  const QPoly b = k_poly(g, {4}, lambda, mu, Variant::Standard, ctx);
  std::ostringstream inst;
  inst << "iso-levi sp rank=4 lambda=" << lambda.str() << " mu=" << mu.str()
       << " levis a3 vs a4";
  ck.poly_eq(a, b, inst.str(), "levi-a3", "levi-a4");
  if (info) {
    const QPoly c = k_poly(g, {2, 3}, lambda, mu, Variant::Standard, ctx);
    const QPoly d = k_poly(g, {2, 4}, lambda, mu, Variant::Standard, ctx);
    *info << "recorded (not asserted): levi a2,a3 -> " << c.str() << "  vs  levi a2,a4 -> "
          << d.str() << (c == d ? "  (equal)" : "  (different)") << "\n";
  }
}

}  // namespace drivers

// ======================================================================
// Reference table (symplectic rank 4, lambda = (4,2,2,1), mu = (3,1,1,0)).
// ======================================================================

namespace sp8_table {

struct Row {
  std::vector<int> levi;                          // retained simple roots
  const char* printed;                            // reference cell, verbatim
  std::vector<std::pair<int, long long>> poly;    // parsed cell (unambiguous rows)
  bool suspect = false;                           // excluded from the verbatim gate
  const char* note = nullptr;                     // why the row is suspect
  long long printed_at_one = 0;                   // reference cell at q = 1
};

// Rows in the reference table's own order.
inline const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {{1, 2, 3, 4}, "0", {}, false, nullptr, 0},
      {{2, 3, 4}, "0", {}, false, nullptr, 0},
      {{1, 3, 4}, "2q^4", {{4, 2}}, false, nullptr, 2},
      {{3, 4}, "q^3+2q^2", {{3, 1}, {2, 2}}, false, nullptr, 3},
      {{1, 2, 4}, "q^3+q^2", {{3, 1}, {2, 1}}, false, nullptr, 2},
      {{1, 4}, "3q^4+4q^3+q^2", {{4, 3}, {3, 4}, {2, 1}}, false, nullptr, 8},
      {{2, 4}, "q^4+2q^3+q^2", {{4, 1}, {3, 2}, {2, 1}}, false, nullptr, 4},
      {{4}, "2q^5+4q^4+4q^3+q^2", {{5, 2}, {4, 4}, {3, 4}, {2, 1}}, false, nullptr, 11},
      {{1, 2, 3}, "q^2", {{2, 1}}, false, nullptr, 1},
      {{2, 3},
       "q^3+q^2",
       {{3, 1}, {2, 1}},
       true,
       "conflicts with the reference's equal-polynomials remark",
       2},
      {{1, 2},
       "q^3+2q^3+q^2",
       {},
       true,
       "printed cell is malformed (repeated exponent)",
       4},
      {{1, 3}, "3q^4+4q^3+q^2", {{4, 3}, {3, 4}, {2, 1}}, false, nullptr, 8},
      {{3}, "2q^5+4q^4+4q^3+q^2", {{5, 2}, {4, 4}, {3, 4}, {2, 1}}, false, nullptr, 11},
      {{2},
       "q^5+2q^4+3q^2+q^2",
       {},
       true,
       "printed cell is malformed (repeated exponent)",
       7},
      {{1},
       "q^7+2q^6+3q^5+4q^4+4q^3+q^2",
       {{7, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 4}, {2, 1}},
       false,
       nullptr,
       15},
      {{},
       "q^8+2q^7+3q^6+4q^5+5q^4+4q^3+q^2",
       {{8, 1}, {7, 2}, {6, 3}, {5, 4}, {4, 5}, {3, 4}, {2, 1}},
       false,
       nullptr,
       16},
  };
  return table;
}

inline Weight lambda() { return Weight{4, 2, 2, 1}; }
inline Weight mu() { return Weight{3, 1, 1, 0}; }

inline QPoly printed_poly(const Row& r) {
  QPoly p;
  for (const auto& [e, c] : r.poly) p.add_term(e, c);
  return p;
}

}  // namespace sp8_table

// Branching multiplicity through a route independent of the Levi's own root
// set: restrict to the diagonal GL_n by the full-diagonal alternating sum,
// then contract each GL block with Littlewood-Richardson tableaux.
namespace cli_detail {

inline BigInt contract_blocks(const Partition& sigma, const std::vector<int>& blocks,
                              const std::vector<Partition>& mus, std::size_t upto, int len_avail) {
  if (upto == 0) {
    if (static_cast<int>(sigma.size()) > blocks[0]) return 0;
    Partition target = mus[0];
    while (!target.empty() && target.back() == 0) target.pop_back();
    return sigma == target ? 1 : 0;
  }
  const Int rest = partition_size(sigma) - partition_size(mus[upto]);
  if (rest < 0) return 0;
  BigInt total = 0;
  for (const Partition& tau : partitions_of(rest, len_avail - blocks[upto])) {
    const BigInt c = lr_coeff(sigma, tau, mus[upto]);
    if (c == 0) continue;
    total += c * contract_blocks(tau, blocks, mus, upto - 1, len_avail - blocks[upto]);
  }
  return total;
}

inline BigInt independent_levi_multiplicity(const GroupSpec& g, const std::vector<int>& I,
                                            const Weight& lambda, const Weight& mu,
                                            const EvalContext& ctx) {
  const LeviData L = levi_decomposition(g, I);
  if (L.tail != 0) throw std::invalid_argument("independent_levi_multiplicity: GL-type Levis only");
  const int n = g.rank;
  const Int top = lambda.size() ? lambda[0] : 0;
  BigInt total = 0;
  for (const Weight& gamma : decreasing_vectors(n, mu.total(), -top, top)) {
    // Stage 1: multiplicity of the rational GL_n module gamma in the
    // restriction to the diagonal GL_n (the alternating sum takes rational
    // targets directly).
    const BigInt b = branch_levi(g, gl_levi_indices(g), lambda, gamma, ctx);
    if (b == 0) continue;
    // Stage 2: restrict GL_n to the Levi's GL blocks. Twisting by the c-th
    // determinant power makes every weight polynomial, which the tableau
    // contraction needs; the twist shifts each block target by c as well.
    const Int c = gamma[n - 1] < 0 ? -gamma[n - 1] : 0;
    const Weight mu_c = mu.plus_constant(c);
    std::vector<Partition> mu_blocks;
    for (const auto& blk : split_blocks(mu_c, L.blocks)) {
      Partition p(blk);
      while (!p.empty() && p.back() == 0) p.pop_back();
      if (!is_partition_vector(p)) return 0;  // target not block-dominant
      mu_blocks.push_back(std::move(p));
    }
    const BigInt t = contract_blocks(weight_to_partition(gamma.plus_constant(c)), L.blocks,
                                     mu_blocks, L.blocks.size() - 1, n);
    if (t == 0) continue;
    total += b * t;
  }
  return total;
}

}  // namespace cli_detail

// ======================================================================
// Subcommand handlers
// ======================================================================

namespace cli_detail {

inline int run_kpoly(const GlobalOpts& gopts, const std::string& group_s, int rank,
                     const std::string& levi_s, const std::string& lambda_s,
                     const std::string& mu_s, const std::string& variant_s, std::ostream& out) {
  const GroupSpec g{parse_family_arg(group_s), rank};
  check_guard(g, gopts.rank_guard);
  const std::vector<int> levi = parse_levi(g, levi_s);
  const Weight lambda = weight_from(parse_int_list(lambda_s, "--lambda"), rank, "--lambda");
  const Weight mu = weight_from(parse_int_list(mu_s, "--mu"), rank, "--mu");
  Variant variant = Variant::Standard;
  try {
    variant = parse_variant(variant_s);
  } catch (const std::exception&) {
    throw UsageError("--variant: expected standard|h|stable, got '" + variant_s + "'");
  }
  const EvalContext ctx = make_context(gopts);
  const QPoly p = k_poly(g, levi, lambda, mu, variant, ctx);

  if (gopts.format == "text") {
    out << p.str() << "\n";
  } else if (gopts.format == "csv") {
    out << "group,rank,levi,lambda,mu,variant,poly\n";
    out << family_code(g.family) << ',' << g.rank << ',' << levi_cell(levi) << ','
        << weight_cell(lambda) << ',' << weight_cell(mu) << ',' << variant_code(variant) << ','
        << p.str() << "\n";
  } else {
    ordered_json j;
    j["group"] = family_code(g.family);
    j["rank"] = g.rank;
    ordered_json jl = ordered_json::array();
    for (int i : levi) jl.push_back(i);
    j["levi"] = jl;
    j["lambda"] = weight_to_json(lambda);
    j["mu"] = weight_to_json(mu);
    j["variant"] = variant_code(variant);
    j["poly"] = poly_to_json(p);
    out << j.dump() << "\n";
  }
  return 0;
}

inline int run_tensor(const GlobalOpts& gopts, const std::string& family_s,
                      const std::string& group_s, const std::string& eta_s,
                      const std::string& blocks_s, const std::string& lambda_s, bool graded,
                      std::ostream& out) {
  if (family_s != "c" && family_s != "d" && family_s != "dfrak")
    throw UsageError("--family: expected c|d|dfrak, got '" + family_s + "'");
  const std::vector<int> eta = parse_eta(eta_s);
  int n = 0;
  for (int b : eta) n += b;
  std::optional<GroupSpec> group;
  if (family_s == "dfrak") {
    if (group_s.empty()) throw UsageError("--family dfrak requires --group");
    const Family f = parse_family_arg(group_s);
    if (f == Family::GL) throw UsageError("--family dfrak: --group must be so-odd, sp, or so-even");
    group = GroupSpec{f, n};
  } else if (!group_s.empty()) {
    throw UsageError("--group applies to --family dfrak only");
  }
  check_guard(GroupSpec{Family::GL, n}, gopts.rank_guard);
  const std::vector<Partition> parts = parse_blocks(blocks_s);
  if (parts.size() != eta.size())
    throw UsageError("--blocks: got " + std::to_string(parts.size()) + " blocks for " +
                     std::to_string(eta.size()) + " block sizes");
  const Weight lambda = weight_from(parse_int_list(lambda_s, "--lambda"), n, "--lambda");
  const EvalContext ctx = make_context(gopts);

  QPoly p;
  try {
    if (family_s == "c")
      p = c_poly(n, eta, lambda, parts, ctx);
    else if (family_s == "d")
      p = d_poly(n, eta, lambda, parts, ctx);
    else
      p = dfrak_poly(*group, eta, lambda, parts, ctx);
  } catch (const std::logic_error& e) {
    throw UsageError(e.what());
  }

  if (!graded) {
    out << p.eval_one().str() << "\n";
    return 0;
  }
  if (gopts.format == "text") {
    out << p.str() << "\n";
  } else if (gopts.format == "csv") {
    out << "family,group,eta,blocks,lambda,poly\n";
    out << family_s << ',' << (group ? family_code(group->family) : "-") << ','
        << join_ints({eta.begin(), eta.end()}, " ") << ',' << blocks_cell(parts, ";", " ") << ','
        << weight_cell(lambda) << ',' << p.str() << "\n";
  } else {
    ordered_json j;
    j["family"] = family_s;
    if (group) j["group"] = family_code(group->family);
    ordered_json je = ordered_json::array();
    for (int b : eta) je.push_back(b);
    j["eta"] = je;
    ordered_json jb = ordered_json::array();
    for (const Partition& part : parts) {
      ordered_json one = ordered_json::array();
      for (Int v : part) one.push_back(static_cast<std::int64_t>(v));
      jb.push_back(one);
    }
    j["blocks"] = jb;
    j["lambda"] = weight_to_json(lambda);
    j["poly"] = poly_to_json(p);
    out << j.dump() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string identity;
  std::string group_s;
  int rank = 0;
  std::string levi_s;
  std::string lambda_s;
  std::string mu_s;
  std::string eta_s;
  std::string blocks_s;
  std::string nu_s;
  std::string plus_s;
  std::string minus_s;
  long long k = -1;      // stable-shift translation override
  long long extra = 0;   // dual-d translation surplus
  int random_count = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  long long max_weight = -1;
  bool perturb = false;
};

inline std::vector<Family> family_choice(const std::string& s, bool include_gl) {
  if (s.empty() || s == "all") {
    std::vector<Family> all = {Family::SOodd, Family::Sp, Family::SOeven};
    if (include_gl) all.insert(all.begin(), Family::GL);
    return all;
  }
  const Family f = parse_family_arg(s);
  if (f == Family::GL && !include_gl)
    throw UsageError("--group gl is not meaningful for this identity");
  return {f};
}

inline int run_verify(const GlobalOpts& gopts, const VerifyArgs& a, std::ostream& out,
                      std::ostream& err) {
  const EvalContext ctx = make_context(gopts);
  Checker ck;
  ck.perturb = a.perturb;
  if (a.exhaustive && (a.rank <= 0 || a.max_weight < 0))
    throw UsageError("--exhaustive requires --rank and --max-weight");
  const Int maxw = a.max_weight >= 0 ? a.max_weight : 6;
  const int max_rank = a.rank > 0 ? a.rank : 3;
  check_guard(GroupSpec{Family::Sp, max_rank}, gopts.rank_guard);
  drivers::MulSumTally tally;

  const bool has_instance = !a.lambda_s.empty() || !a.nu_s.empty() || !a.blocks_s.empty();

  if (a.identity == "stable-shift") {
    if (a.random_count > 0) {
      drivers::stable_shift_random(ck, family_choice(a.group_s, true), max_rank, maxw,
                                   a.random_count, a.seed, ctx);
    } else if (a.exhaustive) {
      for (Family f : family_choice(a.group_s, true))
        drivers::stable_shift_exhaustive(ck, GroupSpec{f, max_rank}, maxw, ctx);
    } else if (has_instance) {
      if (a.group_s.empty() || a.rank <= 0 || a.lambda_s.empty() || a.mu_s.empty())
        throw UsageError("stable-shift instance needs --group --rank --lambda --mu [--levi] [--k]");
      const GroupSpec g{parse_family_arg(a.group_s), a.rank};
      check_guard(g, gopts.rank_guard);
      const Weight lambda = weight_from(parse_int_list(a.lambda_s, "--lambda"), g.rank, "--lambda");
      const Weight mu = weight_from(parse_int_list(a.mu_s, "--mu"), g.rank, "--mu");
      const std::vector<int> levi = parse_levi(g, a.levi_s);
      if (a.k >= 0)
        drivers::stable_shift_instance(ck, g, levi, lambda, mu, a.k, ctx);
      else
        drivers::stable_shift_pair(ck, g, levi, lambda, mu, ctx);
    } else {
      throw UsageError("verify needs --random N, --exhaustive, or a full instance");
    }
  } else if (a.identity == "dec-k-c") {
    if (a.random_count > 0) {
      drivers::dec_k_c_random(ck, family_choice(a.group_s, false), max_rank, maxw, a.random_count,
                              a.seed, ctx);
    } else if (a.exhaustive) {
      for (Family f : family_choice(a.group_s, false))
        drivers::dec_k_c_exhaustive(ck, GroupSpec{f, max_rank}, maxw, ctx);
    } else if (has_instance) {
      if (a.group_s.empty() || a.rank <= 0 || a.lambda_s.empty() || a.mu_s.empty())
        throw UsageError("dec-k-c instance needs --group --rank --lambda --mu [--levi]");
      const GroupSpec g{parse_family_arg(a.group_s), a.rank};
      check_guard(g, gopts.rank_guard);
      const Weight lambda = weight_from(parse_int_list(a.lambda_s, "--lambda"), g.rank, "--lambda");
      const Weight mu = weight_from(parse_int_list(a.mu_s, "--mu"), g.rank, "--mu");
      drivers::dec_k_c_instance(ck, g, parse_levi(g, a.levi_s), lambda, mu, ctx);
    } else {
      throw UsageError("verify needs --random N, --exhaustive, or a full instance");
    }
  } else if (a.identity == "mul-sum") {
    if (a.random_count > 0) {
      // Random mode samples the same bounded domain the exhaustive mode walks.
      std::mt19937_64 rng(a.seed);
      const auto fams = family_choice(a.group_s, false);
      for (int t = 0; t < a.random_count; ++t) {
        const Family f = fams[rng() % fams.size()];
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
        const GroupSpec g{f, n};
        const auto nus = partitions_up_to(maxw, n);
        const Partition np = nus[rng() % nus.size()];
        const Weight nu = pad_to_weight(np, n);
        const Int top = np.empty() ? 0 : np[0];
        const auto pluses = partitions_up_to(nu.total(), n, top);
        const Partition plus = pluses[rng() % pluses.size()];
        const auto minuses = partitions_up_to(nu.total() - partition_size(plus),
                                              n - static_cast<int>(plus.size()), top);
        const Partition minus = minuses[rng() % minuses.size()];
        drivers::mul_sum_instance(ck, g, nu, plus, minus, ctx, &tally);
      }
    } else if (a.exhaustive) {
      for (Family f : family_choice(a.group_s, false))
        drivers::mul_sum_exhaustive(ck, GroupSpec{f, max_rank}, maxw, ctx, &tally);
    } else if (has_instance) {
      if (a.group_s.empty() || a.rank <= 0 || a.nu_s.empty())
        throw UsageError("mul-sum instance needs --group --rank --nu [--plus] [--minus]");
      const GroupSpec g{parse_family_arg(a.group_s), a.rank};
      check_guard(g, gopts.rank_guard);
      const Weight nu = weight_from(parse_int_list(a.nu_s, "--nu"), g.rank, "--nu");
      Partition plus, minus;
      for (Int v : parse_int_list(a.plus_s, "--plus")) plus.push_back(v);
      for (Int v : parse_int_list(a.minus_s, "--minus")) minus.push_back(v);
      drivers::mul_sum_instance(ck, g, nu, plus, minus, ctx, &tally);
    } else {
      throw UsageError("verify needs --random N, --exhaustive, or a full instance");
    }
  } else if (a.identity == "dual-d" || a.identity == "dual-dfrak") {
    const bool graded = a.identity == "dual-dfrak";
    std::optional<std::vector<int>> eta;
    if (!a.eta_s.empty()) eta = parse_eta(a.eta_s);
    if (a.random_count > 0) {
      drivers::dual_random(ck, graded, family_choice(a.group_s, false), max_rank, maxw,
                           a.random_count, a.seed, ctx);
    } else if (a.exhaustive) {
      const int n = a.rank > 0 ? a.rank : (eta ? std::accumulate(eta->begin(), eta->end(), 0)
                                               : max_rank);
      if (eta && a.rank > 0 && std::accumulate(eta->begin(), eta->end(), 0) != a.rank)
        throw UsageError("--eta must sum to --rank");
      check_guard(GroupSpec{Family::Sp, n}, gopts.rank_guard);
      if (graded) {
        for (Family f : family_choice(a.group_s, false))
          drivers::dual_dfrak_exhaustive(ck, GroupSpec{f, n}, eta, maxw, ctx);
      } else {
        drivers::dual_d_exhaustive(ck, n, eta, maxw, ctx);
      }
    } else if (has_instance) {
      if (!eta || a.blocks_s.empty() || a.lambda_s.empty())
        throw UsageError(a.identity + " instance needs --eta --blocks --lambda" +
                         (graded ? " --group" : ""));
      int n = 0;
      for (int b : *eta) n += b;
      check_guard(GroupSpec{Family::GL, n}, gopts.rank_guard);
      const std::vector<Partition> parts = parse_blocks(a.blocks_s);
      const Weight lambda = weight_from(parse_int_list(a.lambda_s, "--lambda"), n, "--lambda");
      if (graded) {
        const auto fams = family_choice(a.group_s, false);
        if (fams.size() != 1) throw UsageError("dual-dfrak instance needs a single --group");
        drivers::dual_dfrak_instance(ck, GroupSpec{fams[0], n}, *eta, lambda, parts, ctx);
      } else {
        drivers::dual_d_instance(ck, n, *eta, lambda, parts, a.extra, ctx);
      }
    } else {
      throw UsageError("verify needs --random N, --exhaustive, or a full instance");
    }
  } else if (a.identity == "iso-levi") {
    Weight lambda = sp8_table::lambda();
    Weight mu = sp8_table::mu();
    const bool is_default = a.lambda_s.empty() && a.mu_s.empty();
    if (!a.lambda_s.empty()) lambda = weight_from(parse_int_list(a.lambda_s, "--lambda"), 4, "--lambda");
    if (!a.mu_s.empty()) mu = weight_from(parse_int_list(a.mu_s, "--mu"), 4, "--mu");
    drivers::iso_levi_instance(ck, lambda, mu, ctx, is_default ? &out : nullptr);
  } else {
    throw UsageError("--identity: expected stable-shift|dec-k-c|dual-d|dual-dfrak|mul-sum|iso-levi");
  }

  for (const std::string& v : ck.violations) err << "violation: " << v << "\n";
  out << "identity " << a.identity << ": " << ck.checked << " instances, " << ck.violations.size()
      << " violations";
  if (a.identity == "mul-sum" && (tally.polynomial_checked || tally.rational_checked))
    out << " (polynomial " << tally.polynomial_bad << "/" << tally.polynomial_checked
        << ", rational " << tally.rational_bad << "/" << tally.rational_checked << ")";
  out << "\n";
  return ck.violations.empty() ? 0 : 3;
}

inline int run_scan(const GlobalOpts& gopts, const std::string& conjecture,
                    const std::string& group_s, int rank, long long max_weight,
                    const std::string& variant_s, const std::string& out_path, std::ostream& out) {
  if (conjecture != "positivity")
    throw UsageError("--conjecture: only 'positivity' is available");
  Variant variant = Variant::Standard;
  try {
    variant = parse_variant(variant_s);
  } catch (const std::exception&) {
    throw UsageError("--variant: expected standard|h|stable, got '" + variant_s + "'");
  }
  const std::vector<Family> fams = family_choice(group_s, true);
  for (Family f : fams) check_guard(GroupSpec{f, rank}, gopts.rank_guard);
  const EvalContext ctx = make_context(gopts);

  std::ofstream file;
  std::ostream* csv = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("--out: cannot open '" + out_path + "' for writing");
    csv = &file;
  }
  *csv << "group,rank,levi,lambda,mu,poly,min-coeff\n";

  long long rows = 0, violations = 0;
  for (Family f : fams) {
    const GroupSpec g{f, rank};
    const int n = g.rank;
    for (const auto& I : all_levi_subsets(g)) {
      for (Int lt = 0; lt <= max_weight; ++lt) {
        for (const Partition& lp : partitions_of(lt, n)) {
          const Weight lambda = pad_to_weight(lp, n);
          const Int step = (f == Family::Sp || f == Family::SOeven) ? 2 : 1;
          const Int first = (f == Family::GL) ? lt : lt % step;
          for (Int mt = first; mt <= lt; mt += step) {
            for (const Partition& mp : partitions_of(mt, n)) {
              const Weight mu = pad_to_weight(mp, n);
              const QPoly p = k_poly(g, I, lambda, mu, variant, ctx);
              const BigInt mc = p.min_coeff();
              *csv << family_code(f) << ',' << n << ',' << levi_cell(I) << ','
                   << weight_cell(lambda) << ',' << weight_cell(mu) << ',' << p.str() << ','
                   << mc.str() << "\n";
              ++rows;
              if (variant == Variant::Standard && mc < 0) ++violations;
            }
            if (f == Family::GL) break;
          }
        }
      }
    }
  }
  if (!out_path.empty())
    out << "wrote " << out_path << "\n";
  out << "scan positivity group=" << (group_s.empty() ? "all" : group_s) << " rank=" << rank
      << " max-weight=" << max_weight << " variant=" << variant_code(variant) << ": " << rows
      << " rows, " << violations << " violations\n";
  return 0;
}

inline int run_reproduce(const GlobalOpts& gopts, const std::string& target, std::ostream& out) {
  if (target != "sp8-table")
    throw UsageError("reproduce: unknown target '" + target + "' (available: sp8-table)");
  const EvalContext ctx = make_context(gopts);
  const GroupSpec g{Family::Sp, 4};
  const Weight lambda = sp8_table::lambda();
  const Weight mu = sp8_table::mu();

  int unambiguous = 0, matched = 0, suspects_checked = 0, suspects_agree = 0;
  out << "symplectic rank-4 branching polynomials, lambda=" << lambda.str()
      << " mu=" << mu.str() << "\n\n";
  for (const auto& row : sp8_table::rows()) {
    const LeviData L = levi_decomposition(g, row.levi);
    const QPoly p = k_poly(g, row.levi, lambda, mu, Variant::Standard, ctx);
    std::ostringstream line;
    line << L.name();
    std::string name = line.str();
    out << name;
    for (std::size_t pad = name.size(); pad < 30; ++pad) out << ' ';
    out << (p.is_zero() ? "0" : p.str());
    if (row.suspect) {
      ++suspects_checked;
      const BigInt indep =
          cli_detail::independent_levi_multiplicity(g, row.levi, lambda, mu, ctx);
      const bool agree = indep == row.printed_at_one;
      if (agree) ++suspects_agree;
      out << "   [suspect: " << row.note << "; reference prints \"" << row.printed
          << "\" = " << row.printed_at_one << " at q=1; independent multiplicity "
          << indep.str() << (agree ? " agrees]" : " DISAGREES]");
    } else {
      ++unambiguous;
      if (p == sp8_table::printed_poly(row)) {
        ++matched;
      } else {
        out << "   [MISMATCH: reference prints \"" << row.printed << "\"]";
      }
    }
    out << "\n";
  }
  out << "\nunambiguous rows matched: " << matched << "/" << unambiguous
      << "; suspect rows agreeing at q=1: " << suspects_agree << "/" << suspects_checked << "\n";
  return matched == unambiguous ? 0 : 3;
}

}  // namespace cli_detail

// ======================================================================
// Entry point
// ======================================================================

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"graded branching and tensor-product coefficients for the classical groups"};
  app.name("branchq");
  app.require_subcommand(1);

  GlobalOpts gopts;
  app.add_option("--format", gopts.format, "output format: text|json|csv (default json)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", gopts.jobs, "worker count (default: BRANCHQ_JOBS, then all cores)");
  app.add_option("--memo-limit", gopts.memo_entries,
                 "max cached partition-function entries (default: BRANCHQ_MEMO_MB, then 2^22)");
  app.add_option("--rank-guard", gopts.rank_guard, "max admissible rank (default 8)");

  // ---- kpoly
  auto* kp = app.add_subcommand("kpoly", "graded branching polynomial of one (group, Levi) pair");
  kp->fallthrough();
  std::string kp_group, kp_levi = "none", kp_lambda, kp_mu, kp_variant = "standard";
  int kp_rank = 0;
  kp->add_option("--group", kp_group, "gl|so-odd|sp|so-even")->required();
  kp->add_option("--rank", kp_rank, "rank n")->required();
  kp->add_option("--levi", kp_levi, "simple-root labels a1,a3 | none | all");
  kp->add_option("--lambda", kp_lambda, "highest weight, comma-separated")->required();
  kp->add_option("--mu", kp_mu, "target weight, comma-separated")->required();
  kp->add_option("--variant", kp_variant, "standard|h|stable");

  // ---- tensor
  auto* tn = app.add_subcommand("tensor", "tensor-product coefficient families c, d, dfrak");
  tn->fallthrough();
  std::string tn_family, tn_group, tn_eta, tn_blocks, tn_lambda;
  bool tn_graded = false;
  tn->add_option("--family", tn_family, "c|d|dfrak")->required();
  tn->add_option("--group", tn_group, "so-odd|sp|so-even (dfrak only)");
  tn->add_option("--eta", tn_eta, "block sizes, comma-separated")->required();
  tn->add_option("--blocks", tn_blocks, "block partitions: ';' between blocks, ',' within")
      ->required();
  tn->add_option("--lambda", tn_lambda, "weight, comma-separated")->required();
  tn->add_flag("--q", tn_graded, "emit the graded polynomial instead of the q=1 value");

  // ---- verify
  auto* vf = app.add_subcommand("verify", "check a structural identity on chosen instances");
  vf->fallthrough();
  VerifyArgs va;
  vf->add_option("--identity", va.identity,
                 "stable-shift|dec-k-c|dual-d|dual-dfrak|mul-sum|iso-levi")
      ->required();
  vf->add_option("--group", va.group_s, "family filter (default all applicable)");
  vf->add_option("--rank", va.rank, "instance rank, or rank bound for --random/--exhaustive");
  vf->add_option("--levi", va.levi_s, "simple-root labels a1,a3 | none | all");
  vf->add_option("--lambda", va.lambda_s, "instance weight");
  vf->add_option("--mu", va.mu_s, "instance weight");
  vf->add_option("--eta", va.eta_s, "block sizes");
  vf->add_option("--blocks", va.blocks_s, "block partitions");
  vf->add_option("--nu", va.nu_s, "ambient weight (mul-sum)");
  vf->add_option("--plus", va.plus_s, "polynomial part (mul-sum)");
  vf->add_option("--minus", va.minus_s, "dual part (mul-sum)");
  vf->add_option("--k", va.k, "translation amount override (stable-shift)");
  vf->add_option("--extra", va.extra, "translation surplus (dual-d)");
  vf->add_option("--random", va.random_count, "check N random instances");
  vf->add_option("--seed", va.seed, "random seed (default 0)");
  vf->add_flag("--exhaustive", va.exhaustive, "walk the bounded domain exhaustively");
  vf->add_option("--max-weight", va.max_weight, "weight bound for --random/--exhaustive (default 6)");
  vf->add_flag("--perturb", va.perturb, "corrupt the first comparison (reporting self-test)");

  // ---- scan
  auto* sc = app.add_subcommand("scan", "coefficient-positivity scan, CSV output");
  sc->fallthrough();
  std::string sc_conj, sc_group = "all", sc_variant = "standard", sc_out;
  int sc_rank = 0;
  long long sc_maxw = -1;
  sc->add_option("--conjecture", sc_conj, "positivity")->required();
  sc->add_option("--group", sc_group, "gl|so-odd|sp|so-even|all");
  sc->add_option("--rank", sc_rank, "rank n")->required();
  sc->add_option("--max-weight", sc_maxw, "bound on |lambda|")->required();
  sc->add_option("--variant", sc_variant, "standard|h|stable");
  sc->add_option("--out", sc_out, "CSV file path (default: stdout)");

  // ---- reproduce
  auto* rp = app.add_subcommand("reproduce", "recompute a published reference table");
  rp->fallthrough();
  std::string rp_target;
  rp->add_option("target", rp_target, "sp8-table")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (kp->parsed())
      return run_kpoly(gopts, kp_group, kp_rank, kp_levi, kp_lambda, kp_mu, kp_variant, out);
    if (tn->parsed())
      return run_tensor(gopts, tn_family, tn_group, tn_eta, tn_blocks, tn_lambda, tn_graded, out);
    if (vf->parsed()) return run_verify(gopts, va, out, err);
    if (sc->parsed())
      return run_scan(gopts, sc_conj, sc_group, sc_rank, sc_maxw, sc_variant, sc_out, out);
    if (rp->parsed()) return run_reproduce(gopts, rp_target, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace branchq
