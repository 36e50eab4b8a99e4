#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "degsim/canon.hpp"
#include "degsim/constructions.hpp"
#include "degsim/search.hpp"
#include "degsim/similarity.hpp"
#include "degsim/spectra.hpp"
#include "oracles.hpp"

using namespace degsim;

namespace {
const std::string kData = DEGSIM_DATA_DIR;

std::pair<Graph, Graph> seed_pair() {
  const Graph g1 = read_graphs(kData + "/seed-t3-g1.edges").at(0);
  return {g1, *align_partition(g1, read_graphs(kData + "/seed-t3-g2.edges").at(0))};
}
}  // namespace

TEST(OpVector, IndexRoundTrip) {
  EXPECT_EQ(OpVector::count(1), 3u);
  EXPECT_EQ(OpVector::count(3), 729u);
  for (std::size_t i = 0; i < 729; ++i) EXPECT_EQ(OpVector::from_index(i, 3).index(), i);
  EXPECT_EQ(OpVector::from_index(0, 3).to_string(), "K K K | K K K");
  const auto v = OpVector::from_index(1 + 2 * 3 + 1 * 27, 3);
  EXPECT_EQ(v.to_string(), "C E K | B K K");
}

TEST(ApplyOps, PartAndPairOperations) {
  const Graph s = star_graph(3);
  const auto pi = degree_partition(s);  // {0} deg 3, {1,2,3} deg 1
  OpVector ops = OpVector::from_index(0, 2);
  ops.parts[1] = PartOp::ComplementInside;
  EXPECT_EQ(apply_ops(s, pi, ops), complete_graph(4));
  ops.parts[1] = PartOp::Keep;
  ops.pairs[0] = PairOp::BipEmpty;
  EXPECT_EQ(apply_ops(s, pi, ops), Graph(4));
  ops.pairs[0] = PairOp::BipComplement;
  EXPECT_EQ(apply_ops(s, pi, ops), Graph(4));
}

TEST(Theorem24, SampledOutputsStayCospectral) {
  const auto [g1, g2] = seed_pair();
  const auto pi = degree_partition(g1);
  ASSERT_EQ(pi.parts.size(), 3u);
  std::size_t preserving = 0;
  for (std::size_t i = 0; i < 729; i += 17) {
    const auto ops = OpVector::from_index(i, 3);
    const auto [x, y] = apply_theorem24(g1, g2, pi, ops);
    EXPECT_TRUE(cospectral(x, y, CospectralMode::A)) << ops.to_string();
    EXPECT_TRUE(cospectral(x, y, CospectralMode::AComplement)) << ops.to_string();
  }
  for (std::size_t i = 0; i < 729; ++i) preserving += degree_preserving(pi, g1, OpVector::from_index(i, 3));
  EXPECT_EQ(preserving, 4u);
}

TEST(Theorem24, RejectsMisalignedPartition) {
  const Graph g1 = read_graphs(kData + "/seed-t3-g1.edges").at(0);
  const Graph raw = read_graphs(kData + "/seed-t3-g2.edges").at(0);
  const auto pi = degree_partition(g1);
  if (degree_partition(raw) != pi)
    EXPECT_THROW(apply_theorem24(g1, raw, pi, OpVector::from_index(0, 3)), std::invalid_argument);
  EXPECT_FALSE(align_partition(path_graph(4), star_graph(3)).has_value());
}

TEST(TreeT, BuiltinValidates) {
  const auto r = validate_tree_T(builtin_tree_T());
  EXPECT_TRUE(r.ok()) << r.first_failure();
  const auto f = validate_tree_T(load_tree_T(kData + "/fig5-treeT.edges"));
  EXPECT_TRUE(f.ok()) << f.first_failure();
}

TEST(TreeT, PathAndRandomTreesFail) {
  TreeTData p;
  for (Vertex v = 1; v < 16; ++v) p.edges.emplace_back(v, v + 1);
  EXPECT_FALSE(validate_tree_T(p).ok());
  for (std::uint64_t s = 0; s < 5; ++s) {
    TreeTData t;
    const Graph g = random_tree_base(16, s).graph;
    for (auto [u, v] : g.edges()) t.edges.emplace_back(u + 1, v + 1);
    EXPECT_FALSE(validate_tree_T(t).ok()) << s;
  }
}

TEST(TreeT, CorruptedFileNamesFailingCheck) {
  const auto path = std::filesystem::temp_directory_path() / "degsim-bad-tree.edges";
  {
    std::ofstream out(path);
    out << "# fig5-treeT\n# order: 16\n";
    auto e = builtin_tree_T().edges;
    for (auto& x : e)
      if (x.second == 16) x.first = 10;  // move leaf 16 from 9 to 10
    for (auto [u, v] : e) out << u - 1 << " " << v - 1 << "\n";
  }
  const auto r = validate_tree_T(load_tree_T(path.string()));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.first_failure().empty());
  std::filesystem::remove(path);
}

TEST(McKayPair, Shape) {
  const auto [a, b] = mckay_pair(path_base(2));
  EXPECT_EQ(a.order(), 18u);
  EXPECT_EQ(b.order(), 18u);
  EXPECT_FALSE(isomorphic(a, b));
  const auto [x, y] = mckay_pair(path_base(0));
  EXPECT_EQ(x, y);
  EXPECT_THROW(mckay_pair({Graph(0), 0}), std::invalid_argument);
}
