#include <gtest/gtest.h>

#include <random>

#include "degsim/canon.hpp"
#include "degsim/search.hpp"
#include "degsim/spectra.hpp"
#include "oracles.hpp"

using namespace degsim;

TEST(Unicyclic, CountsMatchBruteForce) {
  // OEIS A001429
  const std::vector<std::size_t> expect = {1, 2, 5, 13, 33, 89, 240, 657};
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(enumerate_unicyclic(n).size(), expect[n - 3]) << n;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto a = enumerate_unicyclic(n), b = enumerate_unicyclic_brute_force(n);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  }
  EXPECT_THROW(enumerate_unicyclic(2), std::invalid_argument);
  EXPECT_THROW(enumerate_unicyclic(17), std::invalid_argument);
}

TEST(Unicyclic, GirthEqualsSpanningTrees) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (const auto& g : enumerate_unicyclic(n)) {
      EXPECT_TRUE(is_unicyclic(g));
      EXPECT_EQ(Integer(static_cast<long>(girth(g))), spanning_tree_count(g));
    }
}

TEST(Trees, Counts) {
  // OEIS A000055
  const std::vector<std::size_t> expect = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(enumerate_trees(n).size(), expect[n - 1]);
}

TEST(Search, NoYesPairsUpToEight) {
  SearchConfig c;
  c.max_n = 8;
  const auto r = ds_pair_search(c);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.yes_pairs.empty());
  EXPECT_EQ(r.orders.size(), 6u);
  // regression: no two non-isomorphic unicyclic graphs on <= 8 vertices share psi
  EXPECT_EQ(r.psi_equal_pairs, 0u);
  c.max_n = 3;
  const auto t = ds_pair_search(c);
  EXPECT_EQ(t.orders.at(0).classes, 1u);
  EXPECT_TRUE(t.candidates.empty());
}

TEST(Search, WeakChainRunsOracle) {
  SearchConfig c;
  c.max_n = 8;
  c.filters = {"degree_sequence"};
  const auto r = ds_pair_search(c);
  EXPECT_EQ(r.candidates.size(), 1u + 10u + 67u + 430u);
  EXPECT_TRUE(r.yes_pairs.empty());
}

TEST(Search, FiltersNeverSplitIsomorphicCopies) {
  // any degree-similar pair must survive every filter; relabeled copies are the
  // degree-similar pairs available here
  std::mt19937_64 rng(6);
  const auto all = enumerate_unicyclic(8);
  for (int k = 0; k < 10; ++k) {
    const Graph g = all[rng() % all.size()];
    const Graph h = g.permuted(oracle::random_perm(8, rng));
    EXPECT_EQ(girth(g), girth(h));
    EXPECT_EQ(mu_polynomial(g), mu_polynomial(h));
    EXPECT_EQ(mu_snf(g).invariant_factors, mu_snf(h).invariant_factors);
    EXPECT_EQ(degree_similar(g, h).verdict, DsVerdict::Yes);
  }
}

TEST(Search, UnknownFilterAndBudget) {
  SearchConfig c;
  c.filters = {"bogus"};
  EXPECT_THROW(ds_pair_search(c), std::invalid_argument);
  SearchConfig b;
  b.max_n = 10;
  b.budget_seconds = 1e-9;
  EXPECT_FALSE(ds_pair_search(b).complete);
}

TEST(Search, JobsDoNotChangeResult) {
  SearchConfig a, b;
  a.max_n = b.max_n = 8;
  a.filters = b.filters = {"degree_sequence", "girth"};
  b.jobs = 4;
  const auto x = ds_pair_search(a), y = ds_pair_search(b);
  ASSERT_EQ(x.candidates.size(), y.candidates.size());
  for (std::size_t i = 0; i < x.candidates.size(); ++i) {
    EXPECT_EQ(x.candidates[i].g1, y.candidates[i].g1);
    EXPECT_EQ(x.candidates[i].verdict, y.candidates[i].verdict);
  }
}

TEST(DsDetermined, FamiliesHaveNoViolations) {
  for (const auto& f : ds_family_registry()) {
    const auto r = ds_determined_assertions(f, 3, f == "cycle-tree" ? 9 : 8);
    EXPECT_GT(r.members, 0u) << f;
    EXPECT_TRUE(r.violations.empty()) << f;
  }
  EXPECT_THROW(ds_determined_assertions("nope", 3, 5), std::invalid_argument);
}

TEST(SnfFamily, StarBaseAndLabelInvariance) {
  // equal SNF; twin leaves at the center repeat t + mu, so D_{n-1} is not 1
  const auto r = snf_family_experiment(BaseKind::Star, 2, 2);
  ASSERT_EQ(r.instances.size(), 1u);
  EXPECT_TRUE(r.instances[0].pass());
  EXPECT_TRUE(r.instances[0].snf_equal);
  EXPECT_FALSE(r.instances[0].dn1_is_one);
  EXPECT_EQ(r.instances[0].dn1, "t + mu");

  // P3 rooted at an endpoint, labeled two ways
  const auto a = family_instance(path_base(2), "a");
  const auto b = family_instance({path_graph(3).permuted({2, 1, 0}), 2}, "b");
  EXPECT_EQ(a.psi_equal, b.psi_equal);
  EXPECT_EQ(a.snf_equal, b.snf_equal);
  EXPECT_EQ(a.snf_shape, b.snf_shape);
  EXPECT_EQ(a.dn1_is_one, b.dn1_is_one);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_TRUE(a.pass());
}

TEST(SnfFamily, TrivialBaseIsFlagged) {
  // P_1 gives T against itself: degree-similar, so the instance cannot pass
  const auto r = snf_family_experiment(BaseKind::Path, 0, 0);
  ASSERT_EQ(r.instances.size(), 1u);
  EXPECT_EQ(r.instances[0].verdict, DsVerdict::Yes);
  EXPECT_FALSE(r.instances[0].pass());
}

TEST(RandomTreeBase, IsTree) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto b = random_tree_base(1 + s % 7, s);
    EXPECT_EQ(b.graph.size() + 1, b.graph.order());
    EXPECT_TRUE(is_connected(b.graph));
    EXPECT_LT(b.root, b.graph.order());
  }
}
