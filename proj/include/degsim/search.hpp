#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degsim/constructions.hpp"
#include "degsim/graph.hpp"
#include "degsim/similarity.hpp"

namespace degsim {

/// One representative per isomorphism class of connected unicyclic graphs
/// on n vertices, in canonical form, sorted by certificate.
/// Throws std::invalid_argument unless 3 <= n <= max_n.
std::vector<Graph> enumerate_unicyclic(std::size_t n, std::size_t max_n = 16);

/// Same classes by brute force over all n-edge graphs on n vertices (small n).
std::vector<Graph> enumerate_unicyclic_brute_force(std::size_t n);

/// Registered filters, cheapest first.
const std::vector<std::string>& filter_registry();

struct SearchConfig {
  std::size_t min_n = 3;
  std::size_t max_n = 10;
  std::vector<std::string> filters = {"degree_sequence", "girth", "psi", "snf"};
  std::uint64_t seed = 0;
  /// Wall-clock cap in seconds; 0 means none.
  double budget_seconds = 0;
  unsigned jobs = 1;
};

struct FilterStats {
  std::string filter;
  std::size_t buckets = 0;         // non-singleton buckets after this filter
  std::size_t graphs = 0;          // graphs in those buckets
  std::size_t pairs = 0;           // candidate pairs left
};

struct OrderStats {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::vector<FilterStats> filters;
  std::size_t oracle_calls = 0;
};

struct CandidatePair {
  std::size_t n = 0;
  std::string g1, g2;  // graph6
  DsVerdict verdict = DsVerdict::No;
};

struct SearchReport {
  std::vector<OrderStats> orders;
  std::vector<CandidatePair> candidates;  // every pair that reached the oracle
  std::vector<CandidatePair> yes_pairs;
  std::size_t psi_equal_pairs = 0;        // non-isomorphic pairs sharing psi
  bool complete = true;
};

/// Throws std::invalid_argument for an unknown filter name.
SearchReport ds_pair_search(const SearchConfig& config);

enum class BaseKind { Path, Star, Tree };

struct FamilyInstance {
  std::string label;
  std::size_t n = 0;
  bool psi_equal = false;
  bool snf_equal = false;
  bool snf_shape = false;   // 1, ..., 1, psi
  bool dn1_is_one = false;  // D_{n-1} = 1 from minors
  std::string dn1;          // D_{n-1} as text
  /// Shape and D_{n-1} = 1 are required for path bases only: twin leaves
  /// in a star or tree base repeat the factor t + mu.
  bool require_shape = true;
  DsVerdict verdict = DsVerdict::No;
  bool pass() const;
};

struct FamilyReport {
  std::vector<FamilyInstance> instances;
  bool all_pass() const;
};

/// Path bases P_{m+1} (m in [m_lo, m_hi]; m = 0 gives T itself twice), star
/// bases K_{1,m} rooted at the center, or random trees on m + 1 vertices.
FamilyReport snf_family_experiment(BaseKind kind, std::size_t m_lo, std::size_t m_hi, std::uint64_t seed = 0,
                                   const TreeTData& tree = builtin_tree_T());
/// One instance for an explicit rooted base (P_1 gives T against itself).
FamilyInstance family_instance(const RootedGraph& base, const std::string& label, std::uint64_t seed = 0,
                               const TreeTData& tree = builtin_tree_T());
RootedGraph random_tree_base(std::size_t n, std::uint64_t seed);
std::optional<BaseKind> parse_base_kind(const std::string& s);

struct FamilyDsReport {
  std::string family;
  std::size_t members = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> violations;  // "U ~ G" as graph6 pairs
};

/// Families: "cycle" (C_n), "two-pendant" (C(r1, r2, d): a cycle with two
/// pendant edges at distance d), "girth" (every unicyclic graph with girth
/// at least n - 2), "cycle-tree" (C_g(r) glued to the root of a tree with no
/// vertex of degree 2 whose root is its unique vertex of maximum degree).
/// Each U is compared against every unicyclic class on the same order:
/// degree_similar YES must mean isomorphic.
/// Throws std::invalid_argument for an unknown family.
FamilyDsReport ds_determined_assertions(const std::string& family, std::size_t n_lo, std::size_t n_hi,
                                        std::uint64_t seed = 0);
const std::vector<std::string>& ds_family_registry();

/// All trees on n vertices up to isomorphism (n >= 1).
std::vector<Graph> enumerate_trees(std::size_t n);

}  // namespace degsim
