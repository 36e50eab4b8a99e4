#include <gtest/gtest.h>

#include <random>

#include "degsim/srg.hpp"
#include "oracles.hpp"

using namespace degsim;

TEST(SrgParams, KnownGraphs) {
  EXPECT_EQ(srg_params(petersen_graph()), (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(srg_params(shrikhande_graph()), (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(srg_params(rook_graph(4)), (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(srg_params(paley_graph(13)), (SrgParams{13, 6, 2, 3}));
  EXPECT_EQ(srg_params(cycle_graph(5)), (SrgParams{5, 2, 0, 1}));
  EXPECT_FALSE(srg_params(path_graph(4)).has_value());
  EXPECT_FALSE(srg_params(cycle_graph(6)).has_value());
  EXPECT_TRUE(srg_params(petersen_graph())->feasible());
}

TEST(OneWalkRegular, Examples) {
  EXPECT_TRUE(is_one_walk_regular(petersen_graph()));
  EXPECT_TRUE(is_one_walk_regular(cycle_graph(6)));
  EXPECT_FALSE(is_one_walk_regular(path_graph(4)));
  EXPECT_FALSE(is_one_walk_regular(star_graph(3)));
}

TEST(Cliques, MatchBruteForce) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const Graph g = oracle::random_graph(9, 0.55, rng);
    for (std::size_t s = 1; s <= 4; ++s) {
      std::size_t brute = 0;
      for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
        bool ok = true;
        for (Vertex u = 0; u < 9 && ok; ++u)
          for (Vertex v = u + 1; v < 9 && ok; ++v)
            if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
        brute += ok;
      }
      EXPECT_EQ(enumerate_cliques(g, s).size(), brute);
    }
  }
  EXPECT_EQ(enumerate_cliques(rook_graph(4), 4).size(), 8u);
}

TEST(DeleteInClique, Validates) {
  const Graph k4 = complete_graph(4);
  const Graph d = delete_H_in_clique(k4, path_graph(3), {0, 1, 2}, {0, 1, 2});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_FALSE(d.adjacent(0, 1));
  EXPECT_THROW(delete_H_in_clique(cycle_graph(4), path_graph(3), {0, 1, 2}, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(delete_H_in_clique(k4, path_graph(3), {0, 1, 2}, {0, 0, 2}), std::invalid_argument);
}

TEST(Sweep, PetersenSingleEdges) {
  const auto r = sweep_mu_equal(petersen_graph(), complete_graph(2), 2);
  EXPECT_EQ(r.cliques, 15u);
  EXPECT_EQ(r.checked, 15u);
  EXPECT_EQ(r.psi_distinct, 1u);
  EXPECT_EQ(r.iso_classes, 1u);
  EXPECT_EQ(r.complement_psi_distinct, 1u);
  EXPECT_THROW(sweep_mu_equal(path_graph(4), complete_graph(2), 2), std::invalid_argument);
  EXPECT_THROW(sweep_mu_equal(petersen_graph(), complete_graph(2), 3), std::invalid_argument);
}

TEST(Sweep, PathInTriangles) {
  // Shrikhande: triangles are the 3-cliques; P3 embedded three ways each
  const auto r = sweep_mu_equal(shrikhande_graph(), path_graph(3), 3);
  EXPECT_EQ(r.cliques, 32u);
  EXPECT_EQ(r.checked, 96u);
  EXPECT_EQ(r.psi_distinct, 1u);
}

TEST(ShermanMorrison, RandomInstances) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-3, 3);
  int done = 0;
  while (done < 60) {
    const std::size_t n = 1 + rng() % 4;
    RatMatrix b(n, n);
    std::vector<Rational> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = d(rng), v[i] = d(rng);
      for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
    }
    if (det_rational(b) == 0) {
      EXPECT_THROW(sherman_morrison_check(b, u, v), std::invalid_argument);
      continue;
    }
    const auto r = sherman_morrison_check(b, u, v);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.singular, r.denominator == 0);
    EXPECT_EQ(r.inverse.has_value(), !r.singular);
    ++done;
  }
}

TEST(DetCommutation, RandomShapes) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int k = 0; k < 60; ++k) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    RatMatrix c(m, n), e(n, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = d(rng), e(j, i) = d(rng);
    EXPECT_TRUE(det_commutation_check(c, e));
  }
  EXPECT_THROW(det_commutation_check(RatMatrix(2, 3), RatMatrix(2, 3)), std::invalid_argument);
}
