#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "degsim/graph.hpp"

namespace degsim {

struct CanonResult {
  /// labeling[v] is the canonical position of vertex v.
  std::vector<Vertex> labeling;
  /// graph6 string of g.permuted(labeling); equal iff isomorphic.
  std::string certificate;
};

/// Refinement to an equitable partition, then backtracking on the first
/// non-singleton cell (branches in vertex-index order), keeping the
/// lexicographically least relabeled adjacency. Automorphisms found along
/// the way prune sibling branches.
/// Throws std::invalid_argument when g.order() > max_n.
CanonResult canonical_form(const Graph& g, std::size_t max_n = 64);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace degsim
