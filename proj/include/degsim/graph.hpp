#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degsim/linalg.hpp"
#include "degsim/rational.hpp"

namespace degsim {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Malformed graph6 / edge-list input. `offset` is the byte (graph6) or line
/// (edge list) where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  std::size_t size() const;
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex u) const;
  std::vector<std::size_t> degrees() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Relabels: vertex v of this graph becomes perm[v].
  Graph permuted(const std::vector<Vertex>& perm) const;

  IntMatrix adjacency_matrix() const;
  IntMatrix degree_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_vertex(Vertex v) const;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

/// Vertices grouped by degree, parts in strictly decreasing degree order,
/// each part sorted.
struct DegreePartition {
  std::vector<VertexSet> parts;
  std::vector<std::size_t> degrees;
  friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
};

// graph6 / edge-list I/O

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "u v" lines (0-based); '#' starts a comment. The directive "# order: N"
/// fixes the vertex count (otherwise 1 + the largest endpoint).
struct EdgeListFile {
  std::string name;  // first comment line, if any
  Graph graph;
};
EdgeListFile parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g, const std::string& name = "");

/// Reads every graph in a file: graph6 (one per line) or one edge list,
/// detected from the first non-blank byte.
std::vector<Graph> read_graphs(const std::string& path);
/// Reads a single graph from text (graph6 or edge list, auto-detected).
Graph parse_graph_text(const std::string& text);

// Operations

DegreePartition degree_partition(const Graph& g);
Graph complement(const Graph& g);
/// Vertices relabeled 0..|S|-1 in the sorted order of S.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Graph on S u T (sorted, relabeled) keeping only the S-T edges of g.
Graph bipartite_subgraph(const Graph& g, const VertexSet& s, const VertexSet& t);
/// g1's vertices keep their labels; g2's non-root vertices follow in order.
/// The merged vertex is the root of the result.
RootedGraph coalescence(const RootedGraph& g1, const RootedGraph& g2);
Graph delete_edges(const Graph& g, const std::vector<Edge>& edges);

struct InvariantsReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t isolated = 0;
  std::size_t components = 0;
  std::size_t bipartite_components = 0;
  std::size_t girth = 0;        // 0 for a forest
  Integer spanning_trees = 0;   // 0 when disconnected
  std::vector<Integer> walks;   // walks[k] = 1^T A^k 1, k = 0..max_walk_length
};

InvariantsReport invariants_report(const Graph& g, std::size_t max_walk_length);
std::size_t girth(const Graph& g);
Integer spanning_tree_count(const Graph& g);
std::vector<Integer> walk_counts(const Graph& g, std::size_t max_length);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_unicyclic(const Graph& g);

// Named graphs

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,k} with center 0.
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
/// Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1).
Graph shrikhande_graph();
/// K_k x K_k Cartesian product (k x k rook's graph).
Graph rook_graph(std::size_t k);
/// Paley graph on GF(q) for q in {5, 9, 13, 17, 25}.
Graph paley_graph(std::size_t q);
/// Resolves "K3", "P4", "C5", "S3" (star K_{1,3}), "E4" (empty), "petersen",
/// "shrikhande", "rook4", "paley25"; nullopt if unknown.
std::optional<Graph> named_graph(const std::string& name);

}  // namespace degsim
