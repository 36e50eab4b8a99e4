#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degsim/graph.hpp"

namespace degsim {

enum class PartOp { Keep, ComplementInside, EmptyInside };
enum class PairOp { Keep, BipComplement, BipEmpty };

/// One operation per part and one per unordered pair of parts (lex order).
struct OpVector {
  std::vector<PartOp> parts;
  std::vector<PairOp> pairs;

  /// 3^t * 3^C(t,2).
  static std::size_t count(std::size_t t);
  /// Mixed radix, little-endian: part ops first, then pair ops.
  static OpVector from_index(std::size_t index, std::size_t t);
  std::size_t index() const;
  /// e.g. "K C E | K B E" (parts | pairs).
  std::string to_string() const;
  friend bool operator==(const OpVector&, const OpVector&) = default;
};

/// Applies ops to g along the parts of pi.
Graph apply_ops(const Graph& g, const DegreePartition& pi, const OpVector& ops);

/// Both graphs must have degree partition pi exactly (same vertex sets);
/// std::invalid_argument otherwise.
std::pair<Graph, Graph> apply_theorem24(const Graph& g1, const Graph& g2, const DegreePartition& pi,
                                        const OpVector& ops);

/// Relabels g2 so that its degree partition has the same vertex sets as g1's
/// (each part mapped in sorted order). nullopt if the part sizes or degrees differ.
std::optional<Graph> align_partition(const Graph& g1, const Graph& g2);

/// True iff applying ops keeps the degree partition of g equal to pi
/// (same parts with the same degrees).
bool degree_preserving(const DegreePartition& pi, const Graph& g, const OpVector& ops);

/// Tree on labels 1..16 with two roots.
struct TreeTData {
  std::vector<Edge> edges;  // labels 1..16
  Vertex root1 = 4;
  Vertex root2 = 7;
  /// Graph on 0..15, vertex i carrying label i + 1.
  Graph graph() const;
};

/// The tree shipped with the library (reconstructed from the structure
/// used in the coalescence proofs).
TreeTData builtin_tree_T();
/// Reads an edge list in 0-based form (index = label - 1); roots
/// default to labels 4 and 7.
TreeTData load_tree_T(const std::string& path);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool ok() const;
  /// Name of the first failing check, empty if none.
  std::string first_failure() const;
};

ValidationReport validate_tree_T(const TreeTData& candidate);

/// G(r) coalesced with T at root1 and at root2. T's vertices keep indices
/// 0..15; the base's non-root vertices follow. A one-vertex base gives (T, T).
/// Throws for an empty base.
std::pair<Graph, Graph> mckay_pair(const RootedGraph& base, const TreeTData& tree = builtin_tree_T());

RootedGraph path_base(std::size_t m);  // P_{m+1} rooted at an endpoint
RootedGraph star_base(std::size_t k);  // K_{1,k} rooted at the center

}  // namespace degsim
