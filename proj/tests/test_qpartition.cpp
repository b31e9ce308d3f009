// Quantized vector partition counting: generator sets, the memoized counter,
// and its agreement with a brute-force enumerator.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <branchq/partitions.hpp>
#include <branchq/q_partition.hpp>

using namespace branchq;

TEST_CASE("generator set contents") {
  // Roots outside the Levi for the symplectic rank-2 group, empty Levi: all
  // four positive roots.
  const GeneratorSet full = sgi_generators(GroupSpec{Family::Sp, 2}, {});
  REQUIRE(full.gens.size() == 4);
  // Levi {1} removes e1-e2.
  const GeneratorSet part = sgi_generators(GroupSpec{Family::Sp, 2}, {1});
  REQUIRE(part.gens.size() == 3);
  for (const auto& g : part.gens) REQUIRE(g.v != Weight{1, -1});

  // Half-step grading: short generators get exponent 1, others 2.
  const GeneratorSet h = sgi_generators(GroupSpec{Family::SOodd, 2}, {}, Weighting::ShortHalf);
  for (const auto& g : h.gens) {
    Int abs_sum = 0;
    for (int i = 0; i < 2; ++i) abs_sum += g.v[i] < 0 ? -g.v[i] : g.v[i];
    REQUIRE(g.qexp == (abs_sum == 1 ? 1 : 2));
  }
  REQUIRE_THROWS_AS(sgi_generators(GroupSpec{Family::Sp, 2}, {}, Weighting::ShortHalf),
                    std::invalid_argument);

  // Sum-side cone for the odd orthogonal family includes the short vectors.
  const GeneratorSet th = theta_generators(GroupSpec{Family::SOodd, 2});
  REQUIRE(th.gens.size() == 3);

  // Two-block tensor cones on GL_3, eta = (1,2): per cross pair (1,2),(1,3)
  // a difference and a pair sum.
  const GeneratorSet p = p_eta_generators(3, {1, 2});
  REQUIRE(p.gens.size() == 4);
  REQUIRE(std::count_if(p.gens.begin(), p.gens.end(),
                        [](const Generator& g) { return g.v == Weight{1, 1, 0}; }) == 1);
  const GeneratorSet q = q_eta_generators(3, {1, 2});
  REQUIRE(q.gens.size() == 4);
  REQUIRE(std::count_if(q.gens.begin(), q.gens.end(),
                        [](const Generator& g) { return g.v == Weight{-1, -1, 0}; }) == 1);
  REQUIRE(std::count_if(q.gens.begin(), q.gens.end(),
                        [](const Generator& g) { return g.v == Weight{1, -1, 0}; }) == 1);
}

TEST_CASE("graded tensor cone exponents") {
  // Odd orthogonal: cross-block differences carry exponent 2, within/cross
  // negated pair sums exponent 2, short negatives exponent 1.
  const GeneratorSet qb = qfrak_generators(GroupSpec{Family::SOodd, 2}, {1, 1});
  for (const auto& g : qb.gens) {
    Int abs_sum = 0, min_c = 0;
    for (int i = 0; i < 2; ++i) {
      abs_sum += g.v[i] < 0 ? -g.v[i] : g.v[i];
      min_c = std::min(min_c, g.v[i]);
    }
    if (abs_sum == 1) {
      REQUIRE(g.qexp == 1);  // -e_i
    } else {
      REQUIRE(g.qexp == 2);
    }
  }
  // Symplectic: exponent 1 everywhere, strict pairs only (dual cone is the
  // even orthogonal one, which has no doubled vectors).
  const GeneratorSet qc = qfrak_generators(GroupSpec{Family::Sp, 2}, {1, 1});
  for (const auto& g : qc.gens) {
    REQUIRE(g.qexp == 1);
    REQUIRE(g.v != Weight{-2, 0});
    REQUIRE(g.v != Weight{0, -2});
  }
  // Even orthogonal: exponent 1, doubled vectors present (dual cone is the
  // symplectic one).
  const GeneratorSet qd = qfrak_generators(GroupSpec{Family::SOeven, 2}, {1, 1});
  bool saw_double = false;
  for (const auto& g : qd.gens) {
    REQUIRE(g.qexp == 1);
    if (g.v == Weight{-2, 0} || g.v == Weight{0, -2}) saw_double = true;
  }
  REQUIRE(saw_double);
  // Single-block symplectic cone on two coordinates: exactly one pair.
  const GeneratorSet qone = qfrak_generators(GroupSpec{Family::Sp, 2}, {2});
  REQUIRE(qone.gens.size() == 1);
  REQUIRE(qone.gens[0].v == Weight{-1, -1});
  REQUIRE(qone.gens[0].qexp == 1);
}

TEST_CASE("counting goldens") {
  // Single difference generator: (3,-3) needs exactly three copies.
  const GeneratorSet diff = sgi_generators(GroupSpec{Family::GL, 2}, {});
  REQUIRE(diff.gens.size() == 1);
  QCounter c1(diff);
  REQUIRE(c1.count(Weight{3, -3}) == QPoly::monomial(3, 1));
  REQUIRE(c1.count(Weight{2, -1}).is_zero());
  REQUIRE(c1.count(Weight(2)) == QPoly::monomial(0, 1));

  // Full symplectic rank-2 cone: (2,0) = 2e1, or (e1-e2)+(e1+e2), or
  // (e1-e2)+(e1-e2)+2e2.
  QCounter c2(sgi_generators(GroupSpec{Family::Sp, 2}, {}));
  QPoly expect = QPoly::monomial(1, 1);
  expect += QPoly::monomial(2, 1);
  expect += QPoly::monomial(3, 1);
  REQUIRE(c2.count(Weight{2, 0}) == expect);

  // Custom graded generator in the upper cone: three uses of -e1 at exponent 2.
  GeneratorSet single;
  single.n = 2;
  single.gens.push_back({Weight{-1, 0}, 2});
  single.prunes = detail::upper_cone_prunes(2);
  single.label = "single-negative";
  single.validate();
  QCounter c3(single);
  REQUIRE(c3.count(Weight{-3, 0}) == QPoly::monomial(6, 1));

  // Empty generator set counts only the origin.
  const GeneratorSet none = sgi_generators(GroupSpec{Family::Sp, 2}, {1, 2});
  REQUIRE(none.gens.empty());
  QCounter c4(none);
  REQUIRE(c4.count(Weight(2)) == QPoly::monomial(0, 1));
  REQUIRE(c4.count(Weight{1, 0}).is_zero());
}

TEST_CASE("memoized counter agrees with brute enumeration") {
  std::mt19937_64 rng(7);
  auto rnd = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::vector<Family> cfams = {Family::SOodd, Family::Sp, Family::SOeven};
  int done = 0;
  while (done < 240) {
    const int kind = done % 6;
    const int n = rnd(1, 3);
    GeneratorSet gs;
    if (kind == 0) {
      const Family f = static_cast<Family>(rnd(0, 3));
      const GroupSpec g{f, n};
      const auto subsets = all_levi_subsets(g);
      gs = sgi_generators(g, subsets[rng() % subsets.size()]);
    } else if (kind == 1) {
      gs = sgi_generators(GroupSpec{Family::SOodd, n}, {}, Weighting::ShortHalf);
    } else if (kind == 2) {
      gs = theta_generators(GroupSpec{cfams[rng() % 3], n});
    } else {
      const auto etas = compositions_of(n);
      const auto& eta = etas[rng() % etas.size()];
      if (kind == 3)
        gs = p_eta_generators(n, eta);
      else if (kind == 4)
        gs = q_eta_generators(n, eta);
      else
        gs = qfrak_generators(GroupSpec{cfams[rng() % 3], n}, eta);
    }
    Weight beta(n);
    for (int i = 0; i < n; ++i) beta[i] = rnd(-5, 5);
    QCounter counter(gs);
    REQUIRE(counter.count(beta) == brute_qcount(gs, beta));
    ++done;
  }
}

TEST_CASE("memo cache eviction keeps results exact") {
  // A tiny cache forces constant eviction; results must not change.
  const GeneratorSet gs = sgi_generators(GroupSpec{Family::Sp, 3}, {});
  QCounter big(gs);
  QCounter tiny(gs, 8);
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= a; ++b) {
      const Weight beta{a, b, 0};
      REQUIRE(big.count(beta) == tiny.count(beta));
    }
}
