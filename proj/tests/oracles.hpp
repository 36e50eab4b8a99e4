#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "degsim/graph.hpp"
#include "degsim/linalg.hpp"
#include "degsim/matrix.hpp"
#include "degsim/unipoly.hpp"

namespace oracle {

using namespace degsim;

// cofactor expansion along the first row; works over any commutative ring type
template <class T>
T laplace_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    T term = m(0, j) * laplace_det(sub);
    if (j % 2) acc = acc - term;
    else acc = acc + term;
  }
  return acc;
}

// det(tI - M) by Leverrier-Faddeev: M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M M_k)/k
inline UniPoly leverrier(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
        next(i, j) = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    mk = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * mk(l, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return UniPoly(c);
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// number of walks of each length 0..L, by explicit enumeration
inline std::vector<Integer> brute_walks(const Graph& g, std::size_t len) {
  std::vector<Integer> out(len + 1, 0);
  std::function<void(Vertex, std::size_t)> go = [&](Vertex v, std::size_t k) {
    out[k] += 1;
    if (k == len) return;
    for (Vertex w : g.neighbors(v)) go(w, k + 1);
  };
  for (Vertex v = 0; v < g.order(); ++v) go(v, 0);
  return out;
}

// shortest cycle via BFS from every vertex; 0 for forests
inline std::size_t brute_girth(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1), par(n, -1);
    std::vector<Vertex> q{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
      Vertex u = q[h];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1, par[w] = static_cast<long>(u), q.push_back(w);
        } else if (static_cast<long>(w) != par[u]) {
          std::size_t c = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (best == 0 || c < best) best = c;
        }
      }
    }
  }
  return best;
}

// spanning trees by trying every (n-1)-edge subset
inline Integer brute_spanning_trees(const Graph& g) {
  const auto e = g.edges();
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (n == 1) return 1;
  Integer count = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == n - 1) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::function<std::size_t(std::size_t)> f = [&](std::size_t x) { return p[x] == x ? x : p[x] = f(p[x]); };
      for (auto i : pick) {
        auto a = f(e[i].first), b = f(e[i].second);
        if (a == b) return;
        p[a] = b;
      }
      count += 1;
      return;
    }
    for (std::size_t i = start; i < e.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.permuted(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// every labeled graph on n vertices (2^C(n,2) of them)
inline std::vector<Graph> all_labeled(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
