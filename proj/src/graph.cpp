#include "degsim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace degsim {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

std::size_t Graph::size() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

std::size_t Graph::degree(Vertex u) const {
  check_vertex(u);
  return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<long>(u * n_), adj_.begin() + static_cast<long>((u + 1) * n_), 1));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex u = 0; u < n_; ++u) d[u] = degree(u);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (adjacent(u, v)) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a(n_, n_, Integer(0));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (adjacent(u, v)) a(u, v) = 1;
  return a;
}

IntMatrix Graph::degree_matrix() const {
  IntMatrix d(n_, n_, Integer(0));
  for (Vertex u = 0; u < n_; ++u) d(u, u) = static_cast<unsigned long>(degree(u));
  return d;
}

// ---------------------------------------------------------------- graph6

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ')) --end;

  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= end) throw ParseError("graph6: truncated input", i);
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid byte " + std::to_string(c), i);
    return c - 63u;
  };

  std::size_t n = 0;
  if (pos >= end) throw ParseError("graph6: empty input", pos);
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const unsigned chunk = byte_at(pos + b);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (chunk >> bit) & 1u;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", pos + b);
        continue;
      }
      if (!set) continue;
      // Upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
      std::size_t j = 1;
      std::size_t before = 0;
      while (before + j <= k) {
        before += j;
        ++j;
      }
      g.add_edge(k - before, j);
    }
  }
  if (pos + nbytes != end) throw ParseError("graph6: trailing garbage", pos + nbytes);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63u) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63u) + 63));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------- edge list

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::vector<Edge> edges;
  std::optional<std::size_t> order;
  std::size_t max_vertex = 0;
  bool any_vertex = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string body = line.substr(first + 1);
      body.erase(0, body.find_first_not_of(" \t"));
      while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
      if (body.rfind("order:", 0) == 0) {
        try {
          order = std::stoul(body.substr(6));
        } catch (const std::exception&) {
          throw ParseError("edge list: malformed order directive", lineno);
        }
      } else if (file.name.empty() && !body.empty()) {
        file.name = body;
      }
      continue;
    }
    std::istringstream ls(line.substr(0, line.find('#')));  // trailing comment
    long long u = -1, v = -1;
    std::string rest;
    if (!(ls >> u >> v) || u < 0 || v < 0 || (ls >> rest)) throw ParseError("edge list: expected 'u v'", lineno);
    if (u == v) throw ParseError("edge list: loop", lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max({max_vertex, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
    any_vertex = true;
  }
  const std::size_t n = order.value_or(any_vertex ? max_vertex + 1 : 0);
  if (any_vertex && max_vertex >= n) throw ParseError("edge list: vertex exceeds declared order", lineno);
  file.graph = Graph::from_edges(n, edges);
  return file;
}

std::string emit_edge_list(const Graph& g, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "# " << name << "\n";
  os << "# order: " << g.order() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

namespace {

bool looks_like_edge_list(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return false;
  const char c = text[first];
  return c == '#' || (c >= '0' && c <= '9');
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  if (looks_like_edge_list(text)) {
    std::istringstream in(text);
    return parse_edge_list(in).graph;
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty graph input", 0);
  return parse_graph6(std::string_view(text).substr(first));
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (looks_like_edge_list(text)) {
    std::istringstream is(text);
    return {parse_edge_list(is).graph};
  }
  std::vector<Graph> graphs;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

// ---------------------------------------------------------------- operations

DegreePartition degree_partition(const Graph& g) {
  const auto deg = g.degrees();
  std::set<std::size_t, std::greater<>> distinct(deg.begin(), deg.end());
  DegreePartition p;
  for (std::size_t d : distinct) {
    VertexSet part;
    for (Vertex v = 0; v < g.order(); ++v)
      if (deg[v] == d) part.push_back(v);
    p.parts.push_back(std::move(part));
    p.degrees.push_back(d);
  }
  return p;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

VertexSet sorted_checked(const Graph& g, VertexSet s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("vertex set has duplicates");
  for (Vertex v : s)
    if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return s;
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& s_in) {
  const VertexSet s = sorted_checked(g, s_in);
  Graph h(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(i, j);
  return h;
}

Graph bipartite_subgraph(const Graph& g, const VertexSet& s_in, const VertexSet& t_in) {
  const VertexSet s = sorted_checked(g, s_in);
  const VertexSet t = sorted_checked(g, t_in);
  VertexSet both;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
  if (!both.empty()) throw std::invalid_argument("bipartite_subgraph: S and T overlap");
  VertexSet uni;
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(uni));
  std::vector<bool> in_s(g.order(), false);
  for (Vertex v : s) in_s[v] = true;
  Graph h(uni.size());
  for (std::size_t i = 0; i < uni.size(); ++i)
    for (std::size_t j = i + 1; j < uni.size(); ++j)
      if (in_s[uni[i]] != in_s[uni[j]] && g.adjacent(uni[i], uni[j])) h.add_edge(i, j);
  return h;
}

RootedGraph coalescence(const RootedGraph& g1, const RootedGraph& g2) {
  const std::size_t n1 = g1.graph.order(), n2 = g2.graph.order();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("coalescence: empty graph");
  if (g1.root >= n1 || g2.root >= n2) throw std::out_of_range("coalescence: root out of range");
  std::vector<Vertex> map2(n2);
  Vertex next = n1;
  for (Vertex v = 0; v < n2; ++v) map2[v] = (v == g2.root) ? g1.root : next++;
  Graph g(n1 + n2 - 1);
  for (auto [u, v] : g1.graph.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.graph.edges()) g.add_edge(map2[u], map2[v]);
  return {std::move(g), g1.root};
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& edges) {
  Graph h = g;
  for (auto [u, v] : edges) {
    if (u >= g.order() || v >= g.order() || !h.adjacent(u, v))
      throw std::invalid_argument("delete_edges: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    h.remove_edge(u, v);
  }
  return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      comp.push_back(u);
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.adjacent(u, v) && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

bool is_unicyclic(const Graph& g) { return is_connected(g) && g.size() == g.order(); }

std::size_t girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::vector<Vertex> parent(n, n);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

Integer spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) return Integer(0);
  if (n == 1) return Integer(1);
  IntMatrix lap(n - 1, n - 1, Integer(0));
  for (Vertex u = 1; u < n; ++u) {
    lap(u - 1, u - 1) = static_cast<unsigned long>(g.degree(u));
    for (Vertex v = 1; v < n; ++v)
      if (g.adjacent(u, v)) lap(u - 1, v - 1) = -1;
  }
  return det_integer(std::move(lap));
}

std::vector<Integer> walk_counts(const Graph& g, std::size_t max_length) {
  const std::size_t n = g.order();
  // x = A^k 1, walks[k] = 1^T x.
  std::vector<Integer> x(n, Integer(1));
  std::vector<Integer> out;
  out.reserve(max_length + 1);
  for (std::size_t k = 0; k <= max_length; ++k) {
    Integer total = 0;
    for (const auto& v : x) total += v;
    out.push_back(total);
    std::vector<Integer> y(n, Integer(0));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (g.adjacent(u, v)) y[u] += x[v];
    x = std::move(y);
  }
  return out;
}

InvariantsReport invariants_report(const Graph& g, std::size_t max_walk_length) {
  InvariantsReport r;
  r.vertices = g.order();
  r.edges = g.size();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++r.isolated;
  const auto comps = connected_components(g);
  r.components = comps.size();
  for (const auto& comp : comps) {
    std::vector<int> color(g.order(), -1);
    bool bip = true;
    std::queue<Vertex> q;
    color[comp.front()] = 0;
    q.push(comp.front());
    while (!q.empty() && bip) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          bip = false;
          break;
        }
      }
    }
    if (bip) ++r.bipartite_components;
  }
  r.girth = girth(g);
  r.spanning_trees = spanning_tree_count(g);
  r.walks = walk_counts(g, max_walk_length);
  return r;
}

// ---------------------------------------------------------------- named graphs

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph shrikhande_graph() {
  Graph g(16);
  auto id = [](int a, int b) { return static_cast<Vertex>(((a % 4 + 4) % 4) * 4 + (b % 4 + 4) % 4); };
  const int gens[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& s : gens) g.add_edge(id(a, b), id(a + s[0], b + s[1]));
  return g;
}

Graph rook_graph(std::size_t k) {
  Graph g(k * k);
  for (Vertex u = 0; u < k * k; ++u)
    for (Vertex v = u + 1; v < k * k; ++v)
      if (u / k == v / k || u % k == v % k) g.add_edge(u, v);
  return g;
}

Graph paley_graph(std::size_t q) {
  // GF(p) or GF(p^2) = GF(p)[x]/(x^2 - r) with r a non-residue.
  std::size_t p = q, r = 0;
  if (q == 9) {
    p = 3;
    r = 2;
  } else if (q == 25) {
    p = 5;
    r = 2;
  } else if (q != 5 && q != 13 && q != 17 && q != 29) {
    throw std::invalid_argument("paley_graph: unsupported order " + std::to_string(q));
  }
  const bool ext = (p != q);
  auto mul = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (!ext) return (x * y) % p;
    const std::size_t a = x / p, b = x % p, c = y / p, d = y % p;  // a*x + b
    const std::size_t hi = (a * d + b * c) % p;
    const std::size_t lo = (b * d + a * c % p * r) % p;
    return hi * p + lo;
  };
  auto sub = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (!ext) return (x + p - y) % p;
    return ((x / p + p - y / p) % p) * p + (x % p + p - y % p) % p;
  };
  std::vector<bool> square(q, false);
  for (std::size_t x = 1; x < q; ++x) square[mul(x, x)] = true;
  Graph g(q);
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (square[sub(u, v)]) g.add_edge(u, v);
  return g;
}

std::optional<Graph> named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name == "shrikhande") return shrikhande_graph();
  if (name.rfind("rook", 0) == 0 && name.size() > 4) return rook_graph(std::stoul(name.substr(4)));
  if (name.rfind("paley", 0) == 0 && name.size() > 5) return paley_graph(std::stoul(name.substr(5)));
  if (name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    const std::size_t k = std::stoul(name.substr(1));
    switch (name[0]) {
      case 'K': return complete_graph(k);
      case 'P': return path_graph(k);
      case 'C': return cycle_graph(k);
      case 'S': return star_graph(k);
      case 'E': return empty_graph(k);
      default: break;
    }
  }
  return std::nullopt;
}

}  // namespace degsim
