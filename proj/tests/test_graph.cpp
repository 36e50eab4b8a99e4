#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "degsim/canon.hpp"
#include "degsim/graph.hpp"
#include "oracles.hpp"

using namespace degsim;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(emit_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(emit_graph6(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 5u, 8u, 13u, 40u, 63u, 64u, 70u}) {
    const Graph g = oracle::random_graph(n, 0.4, rng);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << n;
  }
}

TEST(Graph6, Rejects) {
  try {
    parse_graph6("Bw~");  // trailing garbage
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("B\x01"), ParseError);  // byte out of range
  EXPECT_THROW(parse_graph6("Bx"), ParseError);     // nonzero padding
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(EdgeList, ParseAndEmit) {
  std::istringstream in("# my-graph\n# order: 5\n0 1\n1 2  # trailing comment\n\n3 2\n");
  const auto f = parse_edge_list(in);
  EXPECT_EQ(f.name, "my-graph");
  EXPECT_EQ(f.graph.order(), 5u);
  EXPECT_EQ(f.graph.size(), 3u);
  std::istringstream back(emit_edge_list(f.graph, "x"));
  EXPECT_EQ(parse_edge_list(back).graph, f.graph);
  EXPECT_EQ(parse_graph_text("0 1\n1 2\n"), path_graph(3));
  EXPECT_EQ(parse_graph_text("Bw\n"), complete_graph(3));
}

TEST(EdgeList, ErrorsCarryLine) {
  std::istringstream bad("0 1\n1 x\n");
  try {
    parse_edge_list(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  std::istringstream loop("0 0\n");
  EXPECT_THROW(parse_edge_list(loop), ParseError);
}

TEST(DataFiles, ReadShipped) {
  const std::string dir = DEGSIM_DATA_DIR;
  EXPECT_EQ(read_graphs(dir + "/srg-corpus.g6").size(), 3u);
  const auto t = read_graphs(dir + "/fig5-treeT.edges");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].order(), 16u);
  EXPECT_EQ(t[0].size(), 15u);
}

TEST(Graph, DegreePartitionAndComplement) {
  const Graph s = star_graph(3);
  const auto pi = degree_partition(s);
  ASSERT_EQ(pi.parts.size(), 2u);
  EXPECT_EQ(pi.degrees, (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(pi.parts[0], (VertexSet{0}));
  EXPECT_EQ(complement(complement(petersen_graph())), petersen_graph());
  EXPECT_EQ(complement(Graph(4)), complete_graph(4));
}

TEST(Graph, SubgraphsAndCoalescence) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(induced_subgraph(c5, {0, 1, 2}), path_graph(3));
  const Graph b = bipartite_subgraph(complete_graph(4), {0, 1}, {2, 3});
  EXPECT_EQ(b.size(), 4u);
  const auto r = coalescence({path_graph(3), 2}, {path_graph(3), 0});
  EXPECT_EQ(r.graph.order(), 5u);
  EXPECT_TRUE(isomorphic(r.graph, path_graph(5)));
  EXPECT_EQ(r.root, 2u);
  EXPECT_EQ(delete_edges(c5, {{0, 1}}), path_graph(5).permuted({1, 2, 3, 4, 0}));
}

TEST(Invariants, MatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    const Graph g = oracle::random_graph(std::uniform_int_distribution<std::size_t>(1, 7)(rng), 0.45, rng);
    EXPECT_EQ(girth(g), oracle::brute_girth(g));
    EXPECT_EQ(walk_counts(g, 6), oracle::brute_walks(g, 6));
    const Integer st = is_connected(g) ? oracle::brute_spanning_trees(g) : Integer(0);
    EXPECT_EQ(spanning_tree_count(g), st);
  }
}

TEST(Invariants, KnownValues) {
  EXPECT_EQ(spanning_tree_count(complete_graph(6)), Integer(1296));  // Cayley
  EXPECT_EQ(girth(petersen_graph()), 5u);
  EXPECT_EQ(girth(path_graph(5)), 0u);
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_EQ(girth(cycle_graph(n)), n);
    EXPECT_EQ(spanning_tree_count(cycle_graph(n)), Integer(static_cast<long>(n)));
  }
  const auto r = invariants_report(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}), 3);
  EXPECT_EQ(r.vertices, 6u);
  EXPECT_EQ(r.edges, 4u);
  EXPECT_EQ(r.isolated, 1u);
  EXPECT_EQ(r.components, 3u);
  EXPECT_EQ(r.bipartite_components, 2u);
  EXPECT_EQ(r.girth, 3u);
  EXPECT_EQ(r.spanning_trees, 0);
  EXPECT_EQ(r.walks.size(), 4u);
  EXPECT_TRUE(is_unicyclic(cycle_graph(4)));
  EXPECT_FALSE(is_unicyclic(complete_graph(4)));
  EXPECT_FALSE(is_unicyclic(path_graph(4)));
}

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(petersen_graph().size(), 15u);
  EXPECT_EQ(shrikhande_graph().size(), 48u);
  EXPECT_EQ(rook_graph(4).size(), 48u);
  EXPECT_FALSE(isomorphic(shrikhande_graph(), rook_graph(4)));
  EXPECT_EQ(paley_graph(13).size(), 39u);
  EXPECT_EQ(paley_graph(9).size(), 18u);
  EXPECT_TRUE(isomorphic(paley_graph(9), rook_graph(3)));
  EXPECT_TRUE(named_graph("K4").has_value());
  EXPECT_FALSE(named_graph("nope").has_value());
  EXPECT_THROW(paley_graph(7), std::invalid_argument);  // 7 is not 1 mod 4
}
