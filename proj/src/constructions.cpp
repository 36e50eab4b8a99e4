#include "degsim/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "degsim/canon.hpp"
#include "degsim/spectra.hpp"

namespace degsim {

std::size_t OpVector::count(std::size_t t) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < t + t * (t - (t > 0 ? 1 : 0)) / 2; ++i) c *= 3;
  return c;
}

OpVector OpVector::from_index(std::size_t index, std::size_t t) {
  if (index >= count(t)) throw std::out_of_range("OpVector index out of range");
  OpVector ops;
  for (std::size_t i = 0; i < t; ++i, index /= 3) ops.parts.push_back(static_cast<PartOp>(index % 3));
  for (std::size_t i = 0; i < t * (t - (t > 0 ? 1 : 0)) / 2; ++i, index /= 3)
    ops.pairs.push_back(static_cast<PairOp>(index % 3));
  return ops;
}

std::size_t OpVector::index() const {
  std::size_t idx = 0, w = 1;
  for (auto p : parts) idx += static_cast<std::size_t>(p) * w, w *= 3;
  for (auto p : pairs) idx += static_cast<std::size_t>(p) * w, w *= 3;
  return idx;
}

std::string OpVector::to_string() const {
  static const char part_code[] = {'K', 'C', 'E'};
  static const char pair_code[] = {'K', 'B', 'E'};
  std::string s;
  for (auto p : parts) s += std::string(s.empty() ? "" : " ") + part_code[static_cast<int>(p)];
  s += " |";
  for (auto p : pairs) s += std::string(" ") + pair_code[static_cast<int>(p)];
  return s;
}

Graph apply_ops(const Graph& g, const DegreePartition& pi, const OpVector& ops) {
  const std::size_t t = pi.parts.size();
  if (ops.parts.size() != t || ops.pairs.size() != t * (t - (t > 0 ? 1 : 0)) / 2)
    throw std::invalid_argument("OpVector does not match the partition");
  Graph h = g;
  auto set = [&](Vertex u, Vertex v, bool on) {
    if (on)
      h.add_edge(u, v);
    else
      h.remove_edge(u, v);
  };
  for (std::size_t i = 0; i < t; ++i) {
    const auto& p = pi.parts[i];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        if (ops.parts[i] == PartOp::ComplementInside) set(p[a], p[b], !g.adjacent(p[a], p[b]));
        if (ops.parts[i] == PartOp::EmptyInside) set(p[a], p[b], false);
      }
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j, ++k) {
      if (ops.pairs[k] == PairOp::Keep) continue;
      for (Vertex u : pi.parts[i])
        for (Vertex v : pi.parts[j]) set(u, v, ops.pairs[k] == PairOp::BipComplement && !g.adjacent(u, v));
    }
  return h;
}

std::pair<Graph, Graph> apply_theorem24(const Graph& g1, const Graph& g2, const DegreePartition& pi,
                                        const OpVector& ops) {
  if (degree_partition(g1).parts != pi.parts || degree_partition(g2).parts != pi.parts)
    throw std::invalid_argument("apply_theorem24: partition is not aligned to both graphs");
  return {apply_ops(g1, pi, ops), apply_ops(g2, pi, ops)};
}

std::optional<Graph> align_partition(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  const auto p1 = degree_partition(g1), p2 = degree_partition(g2);
  if (p1.degrees != p2.degrees) return std::nullopt;
  std::vector<Vertex> perm(g2.order());
  for (std::size_t i = 0; i < p1.parts.size(); ++i) {
    if (p1.parts[i].size() != p2.parts[i].size()) return std::nullopt;
    for (std::size_t j = 0; j < p1.parts[i].size(); ++j) perm[p2.parts[i][j]] = p1.parts[i][j];
  }
  return g2.permuted(perm);
}

bool degree_preserving(const DegreePartition& pi, const Graph& g, const OpVector& ops) {
  return degree_partition(apply_ops(g, pi, ops)) == pi;
}

// ---------------------------------------------------------------- tree T

Graph TreeTData::graph() const {
  Graph g(16);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > 16 || v > 16) throw std::invalid_argument("tree T labels must lie in 1..16");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

TreeTData builtin_tree_T() {
  TreeTData t;
  t.edges = {{1, 2},  {2, 3},  {3, 4},   {3, 11},  {11, 12}, {4, 5},   {5, 6},   {6, 7},
             {7, 8},  {8, 9},  {9, 10},  {9, 16},  {6, 13},  {13, 14}, {14, 15}};
  return t;
}

TreeTData load_tree_T(const std::string& path) {
  const auto graphs = read_graphs(path);
  if (graphs.size() != 1) throw std::runtime_error(path + ": expected one graph");
  TreeTData t;
  for (auto [u, v] : graphs.front().edges()) t.edges.emplace_back(u + 1, v + 1);
  return t;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return "";
}

namespace {

BiPoly poly_alpha() { return BiPoly::t() + BiPoly::mu(); }

BiPoly poly_beta() {
  const BiPoly t = BiPoly::t(), mu = BiPoly::mu();
  return t * t + BiPoly(3) * mu * t + BiPoly(2) * mu * mu - BiPoly(1);
}

BiPoly poly_gamma() {
  const BiPoly t = BiPoly::t(), mu = BiPoly::mu();
  return t * t * t + BiPoly(6) * mu * t * t + (BiPoly(11) * mu * mu - BiPoly(3)) * t + BiPoly(6) * mu * mu * mu -
         BiPoly(5) * mu;
}

BiPoly principal_det(const Graph& g, const VertexSet& s) { return det_bipoly(mu_matrix(g).select(s, s)); }

}  // namespace

ValidationReport validate_tree_T(const TreeTData& candidate) {
  ValidationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  Graph tree;
  try {
    tree = candidate.graph();
  } catch (const std::exception& e) {
    add("tree", false, e.what());
    return report;
  }
  const bool is_tree = tree.size() == 15 && is_connected(tree);
  add("tree", is_tree, is_tree ? "" : "not a tree on 16 vertices");
  const bool roots_ok = candidate.root1 >= 1 && candidate.root1 <= 16 && candidate.root2 >= 1 &&
                        candidate.root2 <= 16 && candidate.root1 != candidate.root2;
  add("roots", roots_ok);
  if (!is_tree || !roots_ok) return report;

  const std::vector<std::pair<std::string, Graph>> attachments = {
      {"P2", path_graph(2)}, {"P3", path_graph(3)}, {"P4", path_graph(4)}, {"K13", star_graph(3)}};
  for (const auto& [name, base] : attachments)
    for (Vertex r = 0; r < base.order(); ++r) {
      const auto [g1, g2] = mckay_pair({base, r}, candidate);
      const std::string tag = name + "@" + std::to_string(r);
      add("non-isomorphic " + tag, !isomorphic(g1, g2));
      add("mu-cospectral " + tag, mu_polynomial(g1) == mu_polynomial(g2));
      bool alqn = cospectral(g1, g2, CospectralMode::A) && cospectral(g1, g2, CospectralMode::L) &&
                  cospectral(g1, g2, CospectralMode::Q) && cospectral(g1, g2, CospectralMode::N);
      add("ALQN-cospectral " + tag, alqn);
    }

  const BiPoly beta = poly_beta();
  const BiPoly b1 = principal_det(tree, {10, 11}), b2 = principal_det(tree, {13, 14});
  add("beta[11,12]", b1 == beta, b1.to_string());
  add("beta[14,15]", b2 == beta, b2.to_string());

  // m = 1 member: d_{n,17} = det on V(T), d_{n,4} = det on V(T) minus root1.
  const auto [g1, g2] = mckay_pair(path_base(1), candidate);
  VertexSet vt, vt_minus;
  for (Vertex v = 0; v < 16; ++v) {
    vt.push_back(v);
    if (v != candidate.root1 - 1) vt_minus.push_back(v);
  }
  const BiPoly g = gcd(principal_det(g1, vt), principal_det(g1, vt_minus));
  const BiPoly abc = (poly_alpha() * beta * poly_gamma()).normalized();
  add("gcd=alpha*beta*gamma", g == abc, g.to_string());
  return report;
}

std::pair<Graph, Graph> mckay_pair(const RootedGraph& base, const TreeTData& tree) {
  if (base.graph.order() == 0) throw std::invalid_argument("mckay_pair: empty base");
  const Graph t = tree.graph();
  if (base.graph.order() == 1) return {t, t};  // P_1: both sides are T
  RootedGraph r1{t, tree.root1 - 1}, r2{t, tree.root2 - 1};
  return {coalescence(r1, base).graph, coalescence(r2, base).graph};
}

RootedGraph path_base(std::size_t m) { return {path_graph(m + 1), 0}; }

RootedGraph star_base(std::size_t k) { return {star_graph(k), 0}; }

}  // namespace degsim
