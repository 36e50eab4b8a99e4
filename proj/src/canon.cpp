#include "degsim/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace degsim {

namespace {

using Mask = std::uint64_t;

struct Search {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::string best_key;
  std::vector<Vertex> best_perm;
  std::vector<Vertex> best_path;
  std::vector<std::vector<Vertex>> autos;
  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  // Split cells by neighbour counts into earlier cells until stable.
  void refine(std::vector<Mask>& cells) const {
  restart:
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const Mask splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (std::popcount(cells[c]) == 1) continue;
        std::map<int, Mask> groups;
        for (Mask m = cells[c]; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          groups[std::popcount(adj[v] & splitter)] |= Mask(1) << v;
        }
        if (groups.size() == 1) continue;
        std::vector<Mask> parts;
        for (auto& [cnt, part] : groups) parts.push_back(part);
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), parts.begin(), parts.end());
        goto restart;
      }
    }
  }

  // Returns the depth to back up to when this leaf matches the best one.
  std::size_t leaf(const std::vector<Mask>& cells, const std::vector<Vertex>& path) {
    std::vector<Vertex> perm(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<Vertex>(std::countr_zero(cells[i]));
      perm[v] = i;
      inv[i] = v;
    }
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) key.push_back((adj[inv[i]] >> inv[j]) & 1 ? '1' : '0');
    if (best_perm.empty() || key < best_key) {
      best_key = std::move(key);
      best_perm = std::move(perm);
      best_path = path;
    } else if (key == best_key) {
      std::vector<Vertex> best_inv(n);
      for (Vertex v = 0; v < n; ++v) best_inv[best_perm[v]] = v;
      std::vector<Vertex> sigma(n);
      bool identity = true;
      for (Vertex v = 0; v < n; ++v) {
        sigma[v] = best_inv[perm[v]];
        identity = identity && sigma[v] == v;
      }
      if (!identity) autos.push_back(std::move(sigma));
      // sigma fixes the common prefix, so the rest of this branch repeats
      // one already searched.
      std::size_t common = 0;
      while (common < path.size() && common < best_path.size() && path[common] == best_path[common]) ++common;
      return common;
    }
    return kNoJump;
  }

  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos) {
      if (!std::all_of(path.begin(), path.end(), [&](Vertex p) { return a[p] == p; })) continue;
      for (Vertex v = 0; v < n; ++v) {
        const Vertex x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (Vertex v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  std::size_t dfs(const std::vector<Mask>& cells, std::vector<Vertex>& path) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) return leaf(cells, path);
    const std::size_t depth = path.size();
    std::vector<Vertex> tried;
    for (Mask m = cells[target]; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      if (!tried.empty()) {
        const auto orb = orbits_fixing(path);
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return orb[u] == orb[v]; })) continue;
      }
      tried.push_back(v);
      std::vector<Mask> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      child.push_back(Mask(1) << v);
      child.push_back(cells[target] & ~(Mask(1) << v));
      child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      refine(child);
      path.push_back(v);
      const std::size_t jump = dfs(child, path);
      path.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }
};

}  // namespace

CanonResult canonical_form(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.order();
  if (n > max_n || n > 64) throw std::invalid_argument("canonical_form: order " + std::to_string(n) + " exceeds bound");
  CanonResult result;
  if (n == 0) {
    result.certificate = emit_graph6(g);
    return result;
  }
  Search s;
  s.n = n;
  s.adj.assign(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) s.adj[u] |= Mask(1) << v;
  std::vector<Mask> cells{n == 64 ? ~Mask(0) : (Mask(1) << n) - 1};
  s.refine(cells);
  std::vector<Vertex> path;
  s.dfs(cells, path);
  result.labeling = s.best_perm;
  result.certificate = emit_graph6(g.permuted(result.labeling));
  return result;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace degsim
