#include "degsim/srg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "degsim/canon.hpp"
#include "degsim/spectra.hpp"

namespace degsim {

std::optional<SrgParams> srg_params(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != d) return std::nullopt;
  const IntMatrix a = g.adjacency_matrix();
  const IntMatrix a2 = a * a;
  std::optional<Integer> adj_common, non_common;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      auto& slot = g.adjacent(u, v) ? adj_common : non_common;
      if (!slot) slot = a2(u, v);
      if (*slot != a2(u, v)) return std::nullopt;
    }
  SrgParams p;
  p.n = n;
  p.d = d;
  p.a = adj_common ? adj_common->get_ui() : 0;
  p.c = non_common ? non_common->get_ui() : 0;
  return p;
}

bool is_one_walk_regular(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  const IntMatrix a = g.adjacency_matrix();
  IntMatrix p = IntMatrix::identity(n);
  const auto edges = g.edges();
  for (std::size_t k = 0; k < n; ++k) {
    for (Vertex v = 1; v < n; ++v)
      if (p(v, v) != p(0, 0)) return false;
    for (const auto& [u, v] : edges)
      if (p(u, v) != p(edges.front().first, edges.front().second)) return false;
    p = p * a;
  }
  return true;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t s) {
  if (s < 1) throw std::invalid_argument("enumerate_cliques: size must be at least 1");
  std::vector<VertexSet> out;
  VertexSet cur;
  std::function<void(const VertexSet&)> grow = [&](const VertexSet& cand) {
    if (cur.size() == s) {
      out.push_back(cur);
      return;
    }
    // Bound: not enough candidates left to finish.
    for (std::size_t i = 0; i < cand.size() && cur.size() + (cand.size() - i) >= s; ++i) {
      const Vertex v = cand[i];
      VertexSet next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
      cur.push_back(v);
      grow(next);
      cur.pop_back();
    }
  };
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  grow(all);
  return out;
}

Graph delete_H_in_clique(const Graph& g, const Graph& h, const VertexSet& clique, const std::vector<Vertex>& embedding) {
  if (h.order() != clique.size() || embedding.size() != clique.size())
    throw std::invalid_argument("delete_H_in_clique: size mismatch");
  VertexSet a = clique, b = embedding;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
    throw std::invalid_argument("delete_H_in_clique: embedding is not a bijection onto the clique");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!g.adjacent(a[i], a[j])) throw std::invalid_argument("delete_H_in_clique: vertex set is not a clique");
  std::vector<Edge> del;
  for (auto [u, v] : h.edges()) del.emplace_back(embedding[u], embedding[v]);
  return delete_edges(g, del);
}

SweepReport sweep_mu_equal(const Graph& g, const Graph& h, std::size_t s) {
  if (h.order() != s) throw std::invalid_argument("sweep_mu_equal: h must have exactly s vertices");
  if (!is_one_walk_regular(g)) throw std::invalid_argument("sweep_mu_equal: precondition failed: g is not 1-walk regular");
  SweepReport r;
  r.params = srg_params(g);
  std::set<BiPoly, bool (*)(const BiPoly&, const BiPoly&)> psis(
      [](const BiPoly& x, const BiPoly& y) { return x.to_string() < y.to_string(); });
  auto comp_psis = psis;
  std::set<std::string> certs;
  const auto cliques = enumerate_cliques(g, s);
  r.cliques = cliques.size();
  for (const auto& clique : cliques) {
    std::set<std::vector<Edge>> seen;
    std::vector<Vertex> emb = clique;
    do {
      std::vector<Edge> image;
      for (auto [u, v] : h.edges()) image.emplace_back(std::min(emb[u], emb[v]), std::max(emb[u], emb[v]));
      std::sort(image.begin(), image.end());
      if (!seen.insert(image).second) continue;
      const Graph del = delete_H_in_clique(g, h, clique, emb);
      ++r.checked;
      psis.insert(mu_polynomial(del));
      if (r.params) comp_psis.insert(mu_polynomial(complement(del)));
      certs.insert(canonical_form(del).certificate);
    } while (std::next_permutation(emb.begin(), emb.end()));
  }
  r.psi_distinct = psis.size();
  if (r.params) r.complement_psi_distinct = comp_psis.size();
  r.iso_classes = certs.size();
  return r;
}

ShermanMorrisonResult sherman_morrison_check(const RatMatrix& b, const std::vector<Rational>& u,
                                             const std::vector<Rational>& v) {
  const std::size_t n = b.rows();
  if (!b.square() || u.size() != n || v.size() != n) throw std::invalid_argument("sherman_morrison_check: shape mismatch");
  const auto binv = inverse(b);
  if (!binv) throw std::invalid_argument("sherman_morrison_check: B is singular");
  std::vector<Rational> bu(n, Rational(0)), vb(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bu[i] += (*binv)(i, j) * u[j];
      vb[j] += v[i] * (*binv)(i, j);
    }
  ShermanMorrisonResult r;
  r.denominator = 1;
  for (std::size_t i = 0; i < n; ++i) r.denominator += v[i] * bu[i];
  RatMatrix updated = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) updated(i, j) += u[i] * v[j];
  if (r.denominator == 0) {
    r.singular = true;
    r.verified = det_rational(updated) == 0;
    return r;
  }
  RatMatrix inv = *binv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) -= bu[i] * vb[j] / r.denominator;
  r.verified = updated * inv == RatMatrix::identity(n);
  r.inverse = std::move(inv);
  return r;
}

bool det_commutation_check(const RatMatrix& c, const RatMatrix& d) {
  if (c.cols() != d.rows() || c.rows() != d.cols()) throw std::invalid_argument("det_commutation_check: shapes not conformable");
  const RatMatrix left = RatMatrix::identity(c.rows()) - c * d;
  const RatMatrix right = RatMatrix::identity(d.rows()) - d * c;
  return det_rational(left) == det_rational(right);
}

}  // namespace degsim
