#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degsim/graph.hpp"
#include "degsim/linalg.hpp"

namespace degsim {

struct SrgParams {
  std::size_t n = 0, d = 0, a = 0, c = 0;
  /// d(d - a - 1) = (n - d - 1) c
  bool feasible() const { return d * (d - a - 1) == (n - d - 1) * c || d == 0; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters iff g is regular and A^2 = dI + aA + c(J - I - A) entrywise.
/// For complete graphs c is reported as 0, for empty graphs a as 0.
std::optional<SrgParams> srg_params(const Graph& g);

/// A^k has constant diagonal and is constant on edges for k = 0..n-1.
bool is_one_walk_regular(const Graph& g);

/// All cliques with exactly s vertices, each sorted, in lexicographic order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t s);

/// Deletes the image of every edge of h under embedding (h-vertex i goes to
/// embedding[i]). The embedding must be a bijection onto a clique of g.
Graph delete_H_in_clique(const Graph& g, const Graph& h, const VertexSet& clique, const std::vector<Vertex>& embedding);

struct SweepReport {
  std::size_t cliques = 0;
  std::size_t checked = 0;      // deleted graphs examined
  std::size_t psi_distinct = 0;
  std::optional<std::size_t> complement_psi_distinct;  // strongly regular g only
  std::size_t iso_classes = 0;
  std::optional<SrgParams> params;
};

/// Every embedding of h into every s-clique of g (duplicates with the same
/// deleted edge set skipped). Throws std::invalid_argument when g is not
/// 1-walk regular or |V(h)| != s.
SweepReport sweep_mu_equal(const Graph& g, const Graph& h, std::size_t s);

struct ShermanMorrisonResult {
  bool singular = false;          // 1 + v^T B^-1 u = 0
  Rational denominator;           // 1 + v^T B^-1 u
  std::optional<RatMatrix> inverse;
  bool verified = false;          // (B + uv^T) * inverse = I, or det = 0 when singular
};

/// Throws std::invalid_argument when B is singular or shapes disagree.
ShermanMorrisonResult sherman_morrison_check(const RatMatrix& b, const std::vector<Rational>& u,
                                             const std::vector<Rational>& v);

/// det(I_m - CD) == det(I_n - DC), both sides computed separately.
/// Throws std::invalid_argument for non-conformable shapes.
bool det_commutation_check(const RatMatrix& c, const RatMatrix& d);

}  // namespace degsim
