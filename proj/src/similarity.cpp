#include "degsim/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace degsim {

std::string to_string(DsVerdict v) {
  switch (v) {
    case DsVerdict::Yes: return "YES";
    case DsVerdict::No: return "NO";
    case DsVerdict::NoProbabilistic: return "NO_PROBABILISTIC";
  }
  return "?";
}

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

SimilaritySpace similarity_space(const Graph& g1, const Graph& g2) {
  SimilaritySpace space;
  space.n = g1.order();
  space.partition1 = degree_partition(g1);
  space.partition2 = degree_partition(g2);
  if (g1.order() != g2.order() || sorted_degrees(g1) != sorted_degrees(g2)) return space;
  const std::size_t n = g1.order();
  const auto d1 = g1.degrees(), d2 = g2.degrees();

  // Unknowns M[u][v] with deg1(u) = deg2(v); D1 M = M D2 holds automatically.
  std::vector<long> var(n * n, -1);
  std::size_t nvars = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (d1[u] == d2[v]) var[u * n + v] = static_cast<long>(nvars++);

  // (A1 M - M A2)[i][j] = sum_k A1[i][k] M[k][j] - sum_k M[i][k] A2[k][j]
  std::vector<std::vector<std::pair<std::size_t, int>>> rows;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, int>> eq;
      for (Vertex k = 0; k < n; ++k) {
        if (g1.adjacent(i, k) && var[k * n + j] >= 0) eq.emplace_back(var[k * n + j], 1);
        if (g2.adjacent(k, j) && var[i * n + k] >= 0) eq.emplace_back(var[i * n + k], -1);
      }
      if (!eq.empty()) rows.push_back(std::move(eq));
    }
  RatMatrix system(rows.size(), nvars, Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [c, s] : rows[r]) system(r, c) += s;

  for (const auto& vec : nullspace(std::move(system))) {
    RatMatrix m(n, n, Rational(0));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (var[u * n + v] >= 0) m(u, v) = vec[static_cast<std::size_t>(var[u * n + v])];
    space.basis.push_back(std::move(m));
  }
  return space;
}

bool verify_witness(const Graph& g1, const Graph& g2, const RatMatrix& m) {
  const std::size_t n = g1.order();
  if (g2.order() != n || m.rows() != n || m.cols() != n) return false;
  const RatMatrix a1 = convert<Rational>(g1.adjacency_matrix()), a2 = convert<Rational>(g2.adjacency_matrix());
  const RatMatrix d1 = convert<Rational>(g1.degree_matrix()), d2 = convert<Rational>(g2.degree_matrix());
  if (a1 * m != m * a2 || d1 * m != m * d2) return false;
  return det_rational(m) != 0;
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform on [1, 2^bits].
  Integer draw(unsigned bits) {
    Integer x = 0;
    unsigned left = bits;
    while (left > 0) {
      const unsigned take = std::min(left, 32u);
      x <<= take;
      x += static_cast<unsigned long>(rng_() >> (64 - take));
      left -= take;
    }
    return x + 1;
  }

 private:
  std::mt19937_64 rng_;
};

IntMatrix combine(const std::vector<IntMatrix>& mats, const std::vector<Integer>& c) {
  IntMatrix m(mats.front().rows(), mats.front().cols(), Integer(0));
  for (std::size_t l = 0; l < mats.size(); ++l) {
    if (c[l] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (mats[l](i, j) != 0) m(i, j) += c[l] * mats[l](i, j);
  }
  return m;
}

IntMatrix as_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::logic_error("similarity basis is not integral");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

// Linearly independent subset of the given integer matrices (as vectors).
std::vector<IntMatrix> independent_subset(const std::vector<IntMatrix>& mats) {
  std::vector<IntMatrix> kept;
  std::vector<std::vector<Rational>> echelon;
  std::vector<std::size_t> pivot_col;
  for (const auto& m : mats) {
    std::vector<Rational> v(m.data().begin(), m.data().end());
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const Rational f = v[pivot_col[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (echelon[r][j] != 0) v[j] -= f * echelon[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    const Rational inv = 1 / *it;
    for (auto& x : v) x *= inv;
    pivot_col.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    kept.push_back(m);
  }
  return kept;
}

// True iff det(sum c_i B_i) vanishes for all c: no nonzero value on the
// simplex {c in N^k : sum c <= d}, d the matrix order (a unisolvent set for
// polynomials of total degree <= d).
bool identically_singular(const std::vector<IntMatrix>& mats, Sampler& sampler) {
  const std::size_t k = mats.size();
  if (k == 0) return true;
  const std::size_t d = mats.front().rows();
  std::vector<Integer> c(k);
  for (int attempt = 0; attempt < 8; ++attempt) {
    for (auto& x : c) x = sampler.draw(16);
    if (det_integer(combine(mats, c)) != 0) return false;
  }
  std::fill(c.begin(), c.end(), Integer(0));
  bool found = false;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t budget) {
    if (found) return;
    if (pos == k) {
      if (det_integer(combine(mats, c)) != 0) found = true;
      return;
    }
    for (std::size_t v = 0; v <= budget && !found; ++v) {
      c[pos] = static_cast<unsigned long>(v);
      walk(pos + 1, budget - v);
    }
    c[pos] = 0;
  };
  walk(0, d);
  return !found;
}

RatMatrix to_rational(const IntMatrix& m) { return convert<Rational>(m); }

}  // namespace

DsDecision degree_similar(const Graph& g1, const Graph& g2, const DsConfig& config) {
  DsDecision out;
  out.seed = config.seed;
  if (g1.order() != g2.order() || sorted_degrees(g1) != sorted_degrees(g2)) {
    out.verdict = DsVerdict::No;
    out.method = "degree-sequence";
    return out;
  }
  const std::size_t n = g1.order();
  if (n == 0) {
    out.verdict = DsVerdict::Yes;
    out.method = "symbolic-determinant";
    out.witness = RatMatrix(0, 0);
    return out;
  }
  const SimilaritySpace space = similarity_space(g1, g2);
  out.basis_dim = space.basis.size();
  if (space.basis.empty()) {
    out.verdict = DsVerdict::No;
    out.method = "empty-space";
    return out;
  }
  std::vector<IntMatrix> basis;
  for (const auto& b : space.basis) basis.push_back(as_integer(b));
  Sampler sampler(config.seed);

  // det M is the product of the block determinants along the degree partition.
  bool unresolved = false;
  for (std::size_t b = 0; b < space.partition1.parts.size(); ++b) {
    const auto& rows = space.partition1.parts[b];
    const auto& cols = space.partition2.parts[b];
    std::vector<IntMatrix> proj;
    for (const auto& m : basis) proj.push_back(m.select(rows, cols));
    const auto ind = independent_subset(proj);
    if (ind.size() > config.symbolic_threshold) {
      unresolved = true;
      continue;
    }
    if (identically_singular(ind, sampler)) {
      out.verdict = DsVerdict::No;
      out.method = "symbolic-determinant";
      out.zero_block_degree = space.partition1.degrees[b];
      return out;
    }
  }

  const std::size_t k = basis.size();
  std::vector<Integer> c(k);
  auto try_point = [&]() -> bool {
    IntMatrix m = combine(basis, c);
    if (det_integer(m) == 0) return false;
    RatMatrix w = to_rational(m);
    if (!verify_witness(g1, g2, w)) throw std::logic_error("degree_similar: witness failed verification");
    out.verdict = DsVerdict::Yes;
    out.method = unresolved ? "randomized" : "symbolic-determinant";
    out.witness = std::move(w);
    return true;
  };
  // Small coefficients first so witnesses stay readable.
  for (int attempt = 0; attempt < 10; ++attempt) {
    for (auto& x : c) x = sampler.draw(8);
    if (try_point()) return out;
  }
  for (std::size_t round = 0; round < config.rounds; ++round) {
    for (auto& x : c) x = sampler.draw(config.sample_bits);
    if (try_point()) return out;
  }
  if (unresolved) {
    out.verdict = DsVerdict::NoProbabilistic;
    out.method = "randomized";
    out.error_bound_log2 = static_cast<double>(config.rounds) *
                           (std::log2(static_cast<double>(n)) - static_cast<double>(config.sample_bits));
    return out;
  }
  // Every block determinant is a nonzero polynomial, so some point works.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& x : c) x = sampler.draw(config.sample_bits);
    if (try_point()) return out;
  }
  throw std::runtime_error("degree_similar: no invertible sample despite nonzero determinant");
}

std::optional<RatMatrix> normalize_row_sums(const Graph& g1, const Graph& g2, const SimilaritySpace& space,
                                            std::uint64_t seed) {
  if (!is_connected(g1)) throw std::logic_error("normalize_row_sums: g1 must be connected");
  const std::size_t n = space.n, k = space.basis.size();
  if (k == 0 || n == 0) return std::nullopt;
  // Coefficient vectors c with (M1)_i = (M^T 1)_j = (M1)_0 for all i, j.
  RatMatrix cons(2 * n - 1, k, Rational(0));
  for (std::size_t l = 0; l < k; ++l) {
    const RatMatrix& b = space.basis[l];
    std::vector<Rational> rs(n, Rational(0)), cs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        rs[i] += b(i, j);
        cs[j] += b(i, j);
      }
    for (std::size_t i = 1; i < n; ++i) cons(i - 1, l) = rs[i] - rs[0];
    for (std::size_t j = 0; j < n; ++j) cons(n - 1 + j, l) = cs[j] - rs[0];
  }
  const auto sub = nullspace(std::move(cons));
  if (sub.empty()) return std::nullopt;
  Sampler sampler(seed);
  std::vector<Rational> ones(n, Rational(1));
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Rational> c(k, Rational(0));
    for (const auto& w : sub) {
      const Rational a(sampler.draw(attempt < 10 ? 8 : 60));
      for (std::size_t l = 0; l < k; ++l) c[l] += a * w[l];
    }
    RatMatrix m(n, n, Rational(0));
    for (std::size_t l = 0; l < k; ++l)
      if (c[l] != 0) m = m + space.basis[l].scaled(c[l]);
    Rational rowsum = 0;
    for (std::size_t j = 0; j < n; ++j) rowsum += m(0, j);
    if (rowsum == 0 || det_rational(m) == 0) continue;
    m = m.scaled(1 / rowsum);
    bool ok = verify_witness(g1, g2, m);
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational r = 0, s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        r += m(i, j);
        s += m(j, i);
      }
      ok = r == 1 && s == 1;
    }
    if (!ok) throw std::logic_error("normalize_row_sums: normalized witness failed verification");
    return m;
  }
  return std::nullopt;
}

bool complement_transfer_check(const Graph& g1, const Graph& g2, const RatMatrix& m) {
  return verify_witness(complement(g1), complement(g2), m);
}

WordTraceResult word_trace_test(const Graph& g1, const Graph& g2, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("word_trace_test: max_len must be at least 1");
  WordTraceResult result;
  if (g1.order() != g2.order()) {
    result.equal = false;
    result.first_mismatch = "I";
    return result;
  }
  const IntMatrix letters1[2] = {g1.adjacency_matrix(), g1.degree_matrix()};
  const IntMatrix letters2[2] = {g2.adjacency_matrix(), g2.degree_matrix()};
  const char names[2] = {'A', 'D'};
  auto trace = [](const IntMatrix& m) {
    Integer t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
  };
  // Breadth-first so the reported mismatch is a shortest one.
  struct Node {
    std::string word;
    IntMatrix p1, p2;
  };
  std::vector<Node> level{{"", IntMatrix::identity(g1.order()), IntMatrix::identity(g2.order())}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    for (const auto& node : level)
      for (int l = 0; l < 2; ++l) {
        Node child{node.word + names[l], node.p1 * letters1[l], node.p2 * letters2[l]};
        ++result.words_checked;
        if (trace(child.p1) != trace(child.p2)) {
          result.equal = false;
          result.first_mismatch = child.word;
          return result;
        }
        next.push_back(std::move(child));
      }
    level = std::move(next);
  }
  return result;
}

}  // namespace degsim
