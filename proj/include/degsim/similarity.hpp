#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degsim/graph.hpp"
#include "degsim/linalg.hpp"

namespace degsim {

/// Basis of {M : A1 M = M A2, D1 M = M D2}. Entries of each basis matrix
/// are coprime integers; M[u][v] can be nonzero only when deg1(u) = deg2(v).
struct SimilaritySpace {
  std::size_t n = 0;
  std::vector<RatMatrix> basis;
  DegreePartition partition1, partition2;  // aligned part by part
};

SimilaritySpace similarity_space(const Graph& g1, const Graph& g2);

struct DsConfig {
  /// Largest per-block space dimension tested symbolically.
  std::size_t symbolic_threshold = 6;
  std::size_t rounds = 40;
  unsigned sample_bits = 60;
  std::uint64_t seed = 0;
};

enum class DsVerdict { Yes, No, NoProbabilistic };
std::string to_string(DsVerdict v);

struct DsDecision {
  DsVerdict verdict = DsVerdict::No;
  std::size_t basis_dim = 0;
  /// "degree-sequence", "empty-space", "symbolic-determinant", "randomized".
  std::string method;
  /// log2 of the Schwartz-Zippel error bound (NoProbabilistic only).
  std::optional<double> error_bound_log2;
  std::optional<RatMatrix> witness;
  /// Degree of the block whose determinant vanishes identically (symbolic NO).
  std::optional<std::size_t> zero_block_degree;
  std::uint64_t seed = 0;
};

DsDecision degree_similar(const Graph& g1, const Graph& g2, const DsConfig& config = {});

/// Exact check that M is invertible with A1 M = M A2 and D1 M = M D2.
bool verify_witness(const Graph& g1, const Graph& g2, const RatMatrix& m);

/// Element of the space with M 1 = M^T 1 = 1, verified exactly.
/// Throws std::logic_error when g1 is disconnected. nullopt when no
/// invertible element with constant row and column sums was sampled.
std::optional<RatMatrix> normalize_row_sums(const Graph& g1, const Graph& g2, const SimilaritySpace& space,
                                            std::uint64_t seed = 0);

/// M^-1 A(G1^c) M = A(G2^c) and the degree-matrix analogue, exactly.
bool complement_transfer_check(const Graph& g1, const Graph& g2, const RatMatrix& m);

struct WordTraceResult {
  bool equal = true;
  std::size_t words_checked = 0;
  std::string first_mismatch;  // word over {A, D}, empty when equal
};

/// tr w(A1, D1) = tr w(A2, D2) for every word of length 1..max_len.
/// A necessary condition for orthogonal degree-similarity only.
WordTraceResult word_trace_test(const Graph& g1, const Graph& g2, std::size_t max_len);

}  // namespace degsim
