#include "degsim/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "degsim/canon.hpp"
#include "degsim/snf.hpp"
#include "degsim/spectra.hpp"

namespace degsim {

namespace {

using Clock = std::chrono::steady_clock;

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, count); ++j)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

// every graph from `prev` with one pendant vertex added, canonical and deduped
void add_leaf_extensions(const std::vector<Graph>& prev, std::map<std::string, Graph>& out) {
  for (const Graph& g : prev) {
    const std::size_t k = g.order();
    for (Vertex v = 0; v < k; ++v) {
      auto edges = g.edges();
      edges.emplace_back(v, k);
      const Graph h = Graph::from_edges(k + 1, edges);
      std::string cert = canonical_form(h).certificate;
      if (!out.count(cert)) out.emplace(cert, parse_graph6(cert));
    }
  }
}

std::vector<Graph> values(const std::map<std::string, Graph>& m) {
  std::vector<Graph> v;
  v.reserve(m.size());
  for (const auto& [cert, g] : m) v.push_back(g);
  return v;
}

std::string degree_key(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  std::string s;
  for (auto x : d) s += std::to_string(x) + ",";
  return s;
}

std::string snf_key(const Graph& g) {
  std::string s;
  for (const auto& f : mu_snf(g).primitive_factors) s += f.to_string() + ";";
  return s;
}

std::size_t pairs_in(std::size_t k) { return k * (k - 1) / 2; }

}  // namespace

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_trees: n must be positive");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    add_leaf_extensions(level, next);
    level = values(next);
  }
  return level;
}

std::vector<Graph> enumerate_unicyclic(std::size_t n, std::size_t max_n) {
  if (n < 3 || n > max_n) throw std::invalid_argument("enumerate_unicyclic: n out of range");
  // U(k) = {C_k} plus one-leaf extensions of U(k-1); a unicyclic graph that is
  // not a cycle always has a pendant vertex
  std::vector<Graph> level;
  for (std::size_t k = 3; k <= n; ++k) {
    std::map<std::string, Graph> next;
    add_leaf_extensions(level, next);
    const std::string c = canonical_form(cycle_graph(k)).certificate;
    next.emplace(c, parse_graph6(c));
    level = values(next);
  }
  return level;
}

std::vector<Graph> enumerate_unicyclic_brute_force(std::size_t n) {
  if (n < 3 || n > 9) throw std::invalid_argument("enumerate_unicyclic_brute_force: n out of range");
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::map<std::string, Graph> found;
  std::vector<Edge> pick;
  std::vector<std::size_t> parent(n);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == n) {
      // union-find connectivity
      for (std::size_t i = 0; i < n; ++i) parent[i] = i;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::size_t comps = n;
      for (auto [u, v] : pick) {
        auto a = find(u), b = find(v);
        if (a != b) parent[a] = b, --comps;
      }
      if (comps != 1) return;
      std::string cert = canonical_form(Graph::from_edges(n, pick)).certificate;
      if (!found.count(cert)) found.emplace(cert, parse_graph6(cert));
      return;
    }
    for (std::size_t i = start; i + (n - pick.size()) <= all.size(); ++i) {
      pick.push_back(all[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return values(found);
}

const std::vector<std::string>& filter_registry() {
  static const std::vector<std::string> names = {"degree_sequence", "girth", "psi", "snf"};
  return names;
}

SearchReport ds_pair_search(const SearchConfig& config) {
  for (const auto& f : config.filters)
    if (std::find(filter_registry().begin(), filter_registry().end(), f) == filter_registry().end())
      throw std::invalid_argument("unknown filter: " + f);
  const auto start = Clock::now();
  auto out_of_time = [&] {
    return config.budget_seconds > 0 &&
           std::chrono::duration<double>(Clock::now() - start).count() > config.budget_seconds;
  };

  SearchReport report;
  DsConfig ds;
  ds.seed = config.seed;
  for (std::size_t n = std::max<std::size_t>(config.min_n, 3); n <= config.max_n; ++n) {
    if (out_of_time()) {
      report.complete = false;
      break;
    }
    const auto classes = enumerate_unicyclic(n, std::max<std::size_t>(config.max_n, 16));
    OrderStats stats;
    stats.n = n;
    stats.classes = classes.size();

    // psi for every class: feeds the psi filter and the psi-equal pair count
    std::vector<std::string> psi(classes.size());
    parallel_for(classes.size(), config.jobs,
                 [&](std::size_t i) { psi[i] = mu_polynomial(classes[i]).normalized().to_string(); });
    {
      std::map<std::string, std::size_t> count;
      for (const auto& p : psi) ++count[p];
      for (const auto& [p, c] : count) report.psi_equal_pairs += pairs_in(c);
    }

    std::vector<std::vector<std::size_t>> groups(1);
    for (std::size_t i = 0; i < classes.size(); ++i) groups[0].push_back(i);
    if (classes.size() < 2) groups.clear();

    for (const auto& f : config.filters) {
      std::vector<std::size_t> members;
      for (const auto& g : groups) members.insert(members.end(), g.begin(), g.end());
      std::vector<std::string> key(classes.size());
      parallel_for(members.size(), config.jobs, [&](std::size_t j) {
        const std::size_t i = members[j];
        const Graph& g = classes[i];
        if (f == "degree_sequence") key[i] = degree_key(g);
        else if (f == "girth") key[i] = std::to_string(girth(g));
        else if (f == "psi") key[i] = psi[i];
        else key[i] = snf_key(g);
      });
      std::vector<std::vector<std::size_t>> split;
      for (const auto& g : groups) {
        std::map<std::string, std::vector<std::size_t>> by;
        for (auto i : g) by[key[i]].push_back(i);
        for (auto& [k, v] : by)
          if (v.size() > 1) split.push_back(std::move(v));
      }
      groups = std::move(split);
      FilterStats fs;
      fs.filter = f;
      fs.buckets = groups.size();
      for (const auto& g : groups) fs.graphs += g.size(), fs.pairs += pairs_in(g.size());
      stats.filters.push_back(fs);
    }

    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (const auto& g : groups)
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) todo.emplace_back(g[a], g[b]);
    std::vector<CandidatePair> found(todo.size());
    std::vector<char> done(todo.size(), 0);
    parallel_for(todo.size(), config.jobs, [&](std::size_t j) {
      if (out_of_time()) return;
      const auto [a, b] = todo[j];
      found[j] = {n, emit_graph6(classes[a]), emit_graph6(classes[b]),
                  degree_similar(classes[a], classes[b], ds).verdict};
      done[j] = 1;
    });
    for (std::size_t j = 0; j < todo.size(); ++j) {
      if (!done[j]) {
        report.complete = false;
        continue;
      }
      ++stats.oracle_calls;
      report.candidates.push_back(found[j]);
      if (found[j].verdict == DsVerdict::Yes) report.yes_pairs.push_back(found[j]);
    }
    report.orders.push_back(std::move(stats));
  }
  return report;
}

bool FamilyInstance::pass() const {
  return psi_equal && snf_equal && (!require_shape || (snf_shape && dn1_is_one)) && verdict != DsVerdict::Yes;
}

bool FamilyReport::all_pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const FamilyInstance& i) { return i.pass(); });
}

std::optional<BaseKind> parse_base_kind(const std::string& s) {
  if (s == "path") return BaseKind::Path;
  if (s == "star") return BaseKind::Star;
  if (s == "tree") return BaseKind::Tree;
  return std::nullopt;
}

RootedGraph random_tree_base(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree_base: n must be positive");
  std::mt19937_64 rng(seed);
  if (n == 1) return {Graph(1), 0};
  if (n == 2) return {path_graph(2), static_cast<Vertex>(rng() % 2)};
  // Pruefer decode
  std::vector<std::size_t> code(n - 2), deg(n, 1);
  for (auto& c : code) c = rng() % n, ++deg[c];
  std::vector<Edge> edges;
  for (auto c : code) {
    std::size_t leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return {Graph::from_edges(n, edges), static_cast<Vertex>(rng() % n)};
}

FamilyInstance family_instance(const RootedGraph& base, const std::string& label, std::uint64_t seed,
                               const TreeTData& tree) {
  const auto [g1, g2] = mckay_pair(base, tree);
  FamilyInstance inst;
  inst.label = label;
  inst.n = g1.order();
  const BiPoly psi = mu_polynomial(g1);
  inst.psi_equal = psi == mu_polynomial(g2);
  const SNFResult s1 = mu_snf(g1), s2 = mu_snf(g2);
  inst.snf_equal = s1.invariant_factors == s2.invariant_factors;
  const auto& f = s1.primitive_factors;
  inst.snf_shape = !f.empty() && f.back() == psi.normalized() &&
                   std::all_of(f.begin(), f.end() - 1, [](const BiPoly& p) { return p == BiPoly(1); });
  const TPoly dn1 = determinant_divisor(to_poly_matrix(mu_matrix(g1)), inst.n - 1);
  inst.dn1_is_one = dn1 == TPoly(1);
  inst.dn1 = dn1.to_bipoly().to_string();
  DsConfig ds;
  ds.seed = seed;
  inst.verdict = degree_similar(g1, g2, ds).verdict;
  return inst;
}

FamilyReport snf_family_experiment(BaseKind kind, std::size_t m_lo, std::size_t m_hi, std::uint64_t seed,
                                   const TreeTData& tree) {
  FamilyReport report;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    switch (kind) {
      case BaseKind::Path:
        report.instances.push_back(family_instance(path_base(m), "path m=" + std::to_string(m), seed, tree));
        break;
      case BaseKind::Star:
        report.instances.push_back(family_instance(star_base(m), "star k=" + std::to_string(m), seed, tree));
        report.instances.back().require_shape = false;
        break;
      case BaseKind::Tree: {
        const std::uint64_t s = seed * 1000003ULL + m;
        report.instances.push_back(family_instance(random_tree_base(m + 1, s),
                                                   "tree n=" + std::to_string(m + 1) + " seed=" + std::to_string(s),
                                                   seed, tree));
        report.instances.back().require_shape = false;
        break;
      }
    }
  }
  return report;
}

const std::vector<std::string>& ds_family_registry() {
  static const std::vector<std::string> names = {"cycle", "two-pendant", "girth", "cycle-tree"};
  return names;
}

namespace {

std::vector<Graph> family_members(const std::string& family, std::size_t n) {
  std::map<std::string, Graph> out;
  auto add = [&](const Graph& g) {
    std::string cert = canonical_form(g).certificate;
    if (!out.count(cert)) out.emplace(cert, g);
  };
  if (family == "cycle") {
    if (n >= 3) add(cycle_graph(n));
  } else if (family == "two-pendant") {
    if (n >= 5) {
      const std::size_t g = n - 2;
      for (std::size_t d = 1; d <= g / 2; ++d) {
        auto edges = cycle_graph(g).edges();
        edges.emplace_back(0, g);
        edges.emplace_back(d, g + 1);
        add(Graph::from_edges(n, edges));
      }
    }
  } else if (family == "girth") {
    if (n >= 3)
      for (const auto& u : enumerate_unicyclic(n, std::max<std::size_t>(n, 16)))
        if (girth(u) + 2 >= n) add(u);
  } else if (family == "cycle-tree") {
    for (std::size_t k = 3; k + 2 <= n; ++k) {
      const std::size_t g = n - k + 1;
      for (const auto& t : enumerate_trees(k)) {
        const auto deg = t.degrees();
        if (std::count(deg.begin(), deg.end(), 2u)) continue;
        const auto top = *std::max_element(deg.begin(), deg.end());
        if (std::count(deg.begin(), deg.end(), top) != 1) continue;
        const Vertex v = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
        add(coalescence({cycle_graph(g), 0}, {t, v}).graph);
      }
    }
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return values(out);
}

}  // namespace

FamilyDsReport ds_determined_assertions(const std::string& family, std::size_t n_lo, std::size_t n_hi,
                                        std::uint64_t seed) {
  if (std::find(ds_family_registry().begin(), ds_family_registry().end(), family) == ds_family_registry().end())
    throw std::invalid_argument("unknown family: " + family);
  FamilyDsReport report;
  report.family = family;
  DsConfig ds;
  ds.seed = seed;
  for (std::size_t n = std::max<std::size_t>(n_lo, 3); n <= n_hi; ++n) {
    const auto members = family_members(family, n);
    if (members.empty()) continue;
    const auto all = enumerate_unicyclic(n, std::max<std::size_t>(n, 16));
    for (const auto& u : members) {
      ++report.members;
      const std::string cu = canonical_form(u).certificate;
      for (const auto& g : all) {
        ++report.comparisons;
        if (degree_similar(u, g, ds).verdict == DsVerdict::Yes && canonical_form(g).certificate != cu)
          report.violations.push_back(emit_graph6(u) + " ~ " + emit_graph6(g));
      }
    }
  }
  return report;
}

}  // namespace degsim
