#include <gtest/gtest.h>

#include <random>

#include "degsim/canon.hpp"
#include "degsim/constructions.hpp"
#include "degsim/similarity.hpp"
#include "degsim/spectra.hpp"
#include "oracles.hpp"

using namespace degsim;

namespace {
const std::string kData = DEGSIM_DATA_DIR;
}

TEST(SimilaritySpace, IsomorphicCopiesHaveRoom) {
  const Graph p = petersen_graph();
  const auto s = similarity_space(p, p);
  // commutant of A on the two eigenspaces of multiplicity 5 and 4 plus the simple one
  EXPECT_EQ(s.basis.size(), 25u + 16u + 1u);
}

TEST(DegreeSimilar, PermutedCopiesAreYesWithVerifiedWitness) {
  std::mt19937_64 rng(21);
  for (const Graph& g : {petersen_graph(), cycle_graph(7), paley_graph(13), star_graph(4)}) {
    const Graph h = g.permuted(oracle::random_perm(g.order(), rng));
    const auto d = degree_similar(g, h);
    ASSERT_EQ(d.verdict, DsVerdict::Yes) << emit_graph6(g);
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_TRUE(verify_witness(g, h, *d.witness));
    EXPECT_TRUE(complement_transfer_check(g, h, *d.witness));
  }
}

TEST(DegreeSimilar, DifferentDegreeSequences) {
  const auto d = degree_similar(path_graph(4), star_graph(3));
  EXPECT_EQ(d.verdict, DsVerdict::No);
  EXPECT_EQ(d.method, "degree-sequence");
}

TEST(DegreeSimilar, CoalescencePairIsSymbolicNo) {
  for (std::size_t m = 1; m <= 2; ++m) {
    const auto [g1, g2] = mckay_pair(path_base(m));
    ASSERT_EQ(mu_polynomial(g1), mu_polynomial(g2));
    const auto d = degree_similar(g1, g2);
    EXPECT_EQ(d.verdict, DsVerdict::No);
    EXPECT_EQ(d.method, "symbolic-determinant");
  }
}

TEST(DegreeSimilar, ShippedSeedPair) {
  const Graph g1 = read_graphs(kData + "/seed-t3-g1.edges").at(0);
  const Graph g2 = read_graphs(kData + "/seed-t3-g2.edges").at(0);
  EXPECT_FALSE(isomorphic(g1, g2));
  const auto d = degree_similar(g1, g2);
  ASSERT_EQ(d.verdict, DsVerdict::Yes);
  EXPECT_TRUE(verify_witness(g1, g2, *d.witness));
  EXPECT_TRUE(word_trace_test(g1, g2, 6).equal);
  EXPECT_EQ(mu_polynomial(g1), mu_polynomial(g2));
  EXPECT_EQ(mu_snf(g1).invariant_factors, mu_snf(g2).invariant_factors);
}

TEST(DegreeSimilar, SeedIsReproducible) {
  std::mt19937_64 rng(2);
  const Graph g = shrikhande_graph(), h = g.permuted(oracle::random_perm(16, rng));
  DsConfig c;
  c.seed = 99;
  const auto a = degree_similar(g, h, c), b = degree_similar(g, h, c);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
  EXPECT_EQ(a.seed, 99u);
}

TEST(DegreeSimilar, YesImpliesPsiEqualOnRandomPairs) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 60; ++k) {
    const Graph a = oracle::random_graph(6, 0.5, rng), b = oracle::random_graph(6, 0.5, rng);
    const auto d = degree_similar(a, b);
    if (oracle::brute_isomorphic(a, b)) EXPECT_EQ(d.verdict, DsVerdict::Yes);
    if (d.verdict == DsVerdict::Yes) {
      EXPECT_TRUE(verify_witness(a, b, *d.witness));
      EXPECT_EQ(mu_polynomial(a), mu_polynomial(b));
    }
  }
}

TEST(VerifyWitness, RejectsSingularAndWrong) {
  const Graph g = cycle_graph(4);
  RatMatrix zero(4, 4);
  EXPECT_FALSE(verify_witness(g, g, zero));
  RatMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  EXPECT_TRUE(verify_witness(g, g, id));
  EXPECT_FALSE(verify_witness(g, path_graph(4), id));
}

TEST(NormalizeRowSums, DoublyStochasticOnConnected) {
  std::mt19937_64 rng(5);
  const Graph g = petersen_graph(), h = g.permuted(oracle::random_perm(10, rng));
  const auto m = normalize_row_sums(g, h, similarity_space(g, h), 3);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(verify_witness(g, h, *m));
  for (std::size_t i = 0; i < 10; ++i) {
    Rational r = 0, c = 0;
    for (std::size_t j = 0; j < 10; ++j) r += (*m)(i, j), c += (*m)(j, i);
    EXPECT_EQ(r, 1);
    EXPECT_EQ(c, 1);
  }
  Graph disc(4);
  disc.add_edge(0, 1);
  EXPECT_THROW(normalize_row_sums(disc, disc, similarity_space(disc, disc)), std::logic_error);
}

TEST(WordTrace, DetectsDifference) {
  const Graph star = star_graph(4);
  Graph c4k1(5);
  for (auto [u, v] : cycle_graph(4).edges()) c4k1.add_edge(u, v);
  const auto r = word_trace_test(star, c4k1, 3);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.first_mismatch.empty());
}
