// degsim command-line entry point. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 assertion failed, 2 usage, 3 data error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "degsim/canon.hpp"
#include "degsim/constructions.hpp"
#include "degsim/report.hpp"
#include "degsim/search.hpp"
#include "degsim/similarity.hpp"
#include "degsim/snf.hpp"
#include "degsim/spectra.hpp"
#include "degsim/srg.hpp"

using namespace degsim;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kAssert = 1, kUsage = 2, kData = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string data_dir() {
  if (const char* d = std::getenv("DEGSIM_DATA_DIR")) return d;
  return "data";
}

std::string resolve(const std::string& path) {
  if (fs::exists(path)) return path;
  const fs::path alt = fs::path(data_dir()) / path;
  if (fs::exists(alt)) return alt.string();
  return path;
}

// "named:petersen", a file (graph6 or edge list), or a literal graph6 string
Graph load_graph(const std::string& arg) {
  if (arg.rfind("named:", 0) == 0) {
    auto g = named_graph(arg.substr(6));
    if (!g) throw UsageError("unknown named graph: " + arg.substr(6));
    return *g;
  }
  const std::string path = resolve(arg);
  if (fs::exists(path)) {
    try {
      auto gs = read_graphs(path);
      if (gs.empty()) throw DataError(path + ": no graph");
      return gs.front();
    } catch (const ParseError& e) {
      throw DataError(path + ": " + e.what());
    }
  }
  try {
    return parse_graph6(arg);
  } catch (const ParseError&) {
    throw DataError("cannot read graph: " + arg);
  }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) return {std::stoul(s), std::stoul(s)};
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range: " + s);
  }
}

void emit(const Json& j) { std::cout << j.dump() << "\n" << std::flush; }

TreeTData tree_from(const std::string& path) {
  if (path.empty()) return builtin_tree_T();
  try {
    return load_tree_T(resolve(path));
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
}

Json graph_pair_json(const Graph& a, const Graph& b) {
  return {{"g1", emit_graph6(a)}, {"g2", emit_graph6(b)}};
}

// validate-data: every shipped file checked by property
int validate_data(const std::string& dir) {
  Json out = Json::array();
  bool ok = true;
  auto record = [&](const std::string& file, const ValidationReport& r) {
    Json j = to_json(r);
    j["file"] = file;
    out.push_back(j);
    ok = ok && r.ok();
  };
  auto path = [&](const std::string& f) { return (fs::path(dir) / f).string(); };

  {
    ValidationReport r;
    try {
      r = validate_tree_T(load_tree_T(path("fig5-treeT.edges")));
    } catch (const std::exception& e) {
      r.checks.push_back({"readable", false, e.what()});
    }
    record("fig5-treeT.edges", r);
  }
  {
    ValidationReport r;
    try {
      const Graph g1 = read_graphs(path("seed-t3-g1.edges")).at(0);
      const Graph g2 = read_graphs(path("seed-t3-g2.edges")).at(0);
      const auto pi = degree_partition(g1);
      r.checks.push_back({"three degree parts", pi.parts.size() == 3, ""});
      r.checks.push_back({"non-isomorphic", !isomorphic(g1, g2), ""});
      const auto d = degree_similar(g1, g2);
      r.checks.push_back({"degree-similar", d.verdict == DsVerdict::Yes, d.method});
    } catch (const std::exception& e) {
      r.checks.push_back({"readable", false, e.what()});
    }
    record("seed-t3", r);
  }
  {
    ValidationReport r;
    try {
      const auto gs = read_graphs(path("srg-corpus.g6"));
      r.checks.push_back({"three graphs", gs.size() == 3, ""});
      for (std::size_t i = 0; i < gs.size(); ++i)
        r.checks.push_back({"strongly regular #" + std::to_string(i), srg_params(gs[i]).has_value(), ""});
    } catch (const std::exception& e) {
      r.checks.push_back({"readable", false, e.what()});
    }
    record("srg-corpus.g6", r);
  }
  if (fs::exists(path("srg25-X1.g6"))) {
    ValidationReport r;
    try {
      const auto p = srg_params(read_graphs(path("srg25-X1.g6")).at(0));
      r.checks.push_back({"srg(25,12,5,6)", p && *p == SrgParams{25, 12, 5, 6}, ""});
    } catch (const std::exception& e) {
      r.checks.push_back({"readable", false, e.what()});
    }
    record("srg25-X1.g6", r);
  }
  emit({{"ok", ok}, {"files", out}});
  if (!ok)
    for (const auto& f : out)
      if (!f["ok"].get<bool>())
        std::cerr << "validate-data: " << f["file"].get<std::string>() << ": "
                  << f["first_failure"].get<std::string>() << " failed\n";
  return ok ? kOk : kData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-similarity and mu-polynomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed / --jobs accepted after the subcommand too
  std::uint64_t seed = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string graph, g1s, g2s, mode = "all", tree_file, base = "path", m_range = "0..4";
  std::size_t k = 0, walks = 6, clique_size = 0, max_n = 10, min_n = 3;
  std::string h_spec, family = "cycle", n_range = "3..8", filters, index_opt;
  bool complement_flag = false, audit = false, all_flag = false;
  double budget = 0;

  auto* mu = app.add_subcommand("mu-poly", "psi(t, mu) = det(tI - A + mu D)");
  mu->add_option("--graph", graph)->required();
  auto* al = app.add_subcommand("alpha-poly", "det(tI - A - alpha J)");
  al->add_option("--graph", graph)->required();
  auto* sn = app.add_subcommand("snf", "Smith form of tI - L_mu over Q(mu)[t]");
  sn->add_option("--graph", graph)->required();
  auto* dd = app.add_subcommand("det-divisor", "D_k of tI - L_mu");
  dd->add_option("--graph", graph)->required();
  dd->add_option("--k", k)->required();
  auto* co = app.add_subcommand("cospectral", "Cospectrality in one or all modes");
  co->add_option("--g1", g1s)->required();
  co->add_option("--g2", g2s)->required();
  co->add_option("--mode", mode, "A, L, Q, N, AAc, alpha, mu or all")->capture_default_str();
  co->add_flag("--audit", audit, "Also run the implication audit with the oracle");
  auto* ds = app.add_subcommand("degree-similar", "Decide degree-similarity");
  ds->add_option("--g1", g1s)->required();
  ds->add_option("--g2", g2s)->required();
  auto* ct = app.add_subcommand("construct-t24", "Cospectral pairs from a degree-similar seed pair");
  ct->add_option("--g1", g1s)->required();
  ct->add_option("--g2", g2s)->required();
  ct->add_option("--index", index_opt, "OpVector index (default: all)");
  auto* mk = app.add_subcommand("mckay-pair", "Base coalesced with T at both roots");
  mk->add_option("--base", base, "path, star or tree")->capture_default_str();
  mk->add_option("--m", k, "Base size parameter")->required();
  mk->add_option("--tree", tree_file, "Tree T edge list");
  auto* srg = app.add_subcommand("srg", "Strongly regular graph tools");
  srg->require_subcommand(1);
  auto* sp = srg->add_subcommand("params", "SRG parameters");
  sp->add_option("--graph", graph)->required();
  auto* sw = srg->add_subcommand("sweep", "psi over all deletions of H inside cliques");
  sw->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  sw->add_option("--graph", graph)->required();
  sw->add_option("--h", h_spec, "graph6 or named:K2 / named:P3")->required();
  sw->add_option("--clique-size", clique_size)->required();
  sw->add_flag("--complement", complement_flag, "Sweep the complement of the graph");
  auto* se = app.add_subcommand("search", "Searches");
  se->require_subcommand(1);
  auto* su = se->add_subcommand("unicyclic", "Degree-similar unicyclic pairs");
  su->add_option("--max-n", max_n)->capture_default_str();
  su->add_option("--min-n", min_n)->capture_default_str();
  su->add_option("--filters", filters, "Comma-separated filter chain");
  su->add_option("--budget", budget, "Seconds; 0 = none");
  auto* ex = app.add_subcommand("experiment", "Experiment drivers");
  ex->require_subcommand(1);
  auto* sf = ex->add_subcommand("snf-family", "SNF checks on the coalescence family");
  sf->add_option("--base", base, "path, star or tree")->capture_default_str();
  sf->add_option("--m", m_range, "m or lo..hi")->capture_default_str();
  sf->add_option("--tree", tree_file, "Tree T edge list");
  auto* dx = ex->add_subcommand("ds-determined", "Degree-similar determined families");
  dx->add_option("--family", family)->capture_default_str();
  dx->add_option("--n", n_range)->capture_default_str();
  auto* iv = app.add_subcommand("invariants", "Walk counts, girth, spanning trees");
  iv->add_option("--graph", graph)->required();
  iv->add_option("--walks", walks)->capture_default_str();
  auto* vd = app.add_subcommand("validate-data", "Check shipped data files");
  std::string dir;
  vd->add_option("--dir", dir, "Data directory (default DEGSIM_DATA_DIR or ./data)");
  auto* cn = app.add_subcommand("canon", "Canonical labeling");
  cn->add_option("--graph", graph)->required();
  cn->add_flag("--all", all_flag, "Every graph in the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kUsage;
  }

  try {
    if (*mu) {
      emit({{"psi", to_json(mu_polynomial(load_graph(graph)))}});
    } else if (*al) {
      emit({{"phi", to_json(alpha_polynomial(load_graph(graph)), "alpha")}});
    } else if (*sn) {
      emit(to_json(mu_snf(load_graph(graph))));
    } else if (*dd) {
      const Graph g = load_graph(graph);
      if (k == 0 || k > g.order()) throw UsageError("--k must be in 1..n");
      emit({{"k", k}, {"divisor", to_json(determinant_divisor(to_poly_matrix(mu_matrix(g)), k))}});
    } else if (*co) {
      const Graph a = load_graph(g1s), b = load_graph(g2s);
      Json j;
      const std::vector<std::string> modes =
          mode == "all" ? std::vector<std::string>{"A", "L", "Q", "N", "AAc", "alpha", "mu"}
                        : std::vector<std::string>{mode};
      for (const auto& s : modes) {
        auto m = parse_cospectral_mode(s);
        if (!m) throw UsageError("unknown mode: " + s);
        try {
          j[to_string(*m)] = cospectral(a, b, *m);
        } catch (const std::domain_error&) {
          j[to_string(*m)] = nullptr;  // N with an isolated vertex
        }
      }
      if (audit) {
        DsConfig c;
        c.seed = seed;
        const auto d = degree_similar(a, b, c);
        const auto ia = implication_audit(a, b, d.verdict == DsVerdict::Yes);
        j["audit"] = to_json(ia);
        if (!ia.violations.empty()) {
          emit(j);
          return kAssert;
        }
      }
      emit(j);
    } else if (*ds) {
      DsConfig c;
      c.seed = seed;
      emit(to_json(degree_similar(load_graph(g1s), load_graph(g2s), c)));
    } else if (*ct) {
      const Graph a = load_graph(g1s);
      auto b = align_partition(a, load_graph(g2s));
      if (!b) throw DataError("degree partitions differ in sizes or degrees");
      const auto pi = degree_partition(a);
      const std::size_t t = pi.parts.size(), total = OpVector::count(t);
      std::size_t lo = 0, hi = total;
      if (!index_opt.empty()) {
        lo = std::stoul(index_opt);
        if (lo >= total) throw UsageError("--index out of range");
        hi = lo + 1;
      }
      bool ok = true;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto ops = OpVector::from_index(i, t);
        const auto [x, y] = apply_theorem24(a, *b, pi, ops);
        const bool ac = cospectral(x, y, CospectralMode::A) && cospectral(x, y, CospectralMode::AComplement);
        Json j = graph_pair_json(x, y);
        j["index"] = i;
        j["ops"] = ops.to_string();
        j["a_cospectral_with_complements"] = ac;
        j["degree_preserving"] = degree_preserving(pi, a, ops);
        ok = ok && ac;
        emit(j);
      }
      if (!ok) return kAssert;
    } else if (*mk) {
      const auto kind = parse_base_kind(base);
      if (!kind) throw UsageError("unknown base: " + base);
      const RootedGraph rb = *kind == BaseKind::Path   ? path_base(k)
                             : *kind == BaseKind::Star ? star_base(k)
                                                       : random_tree_base(k + 1, seed);
      const auto [a, b] = mckay_pair(rb, tree_from(tree_file));
      emit(graph_pair_json(a, b));
    } else if (*sp) {
      const Graph g = load_graph(graph);
      const auto p = srg_params(g);
      emit({{"params", p ? to_json(*p) : Json(nullptr)}, {"one_walk_regular", is_one_walk_regular(g)}});
    } else if (*sw) {
      Graph g = load_graph(graph);
      if (complement_flag) g = complement(g);
      Graph h = load_graph(h_spec);
      emit(to_json(sweep_mu_equal(g, h, clique_size)));
    } else if (*su) {
      SearchConfig c;
      c.seed = seed;
      c.jobs = jobs;
      c.budget_seconds = budget;
      if (!filters.empty()) {
        c.filters.clear();
        std::stringstream ss(filters);
        for (std::string f; std::getline(ss, f, ',');)
          if (!f.empty()) c.filters.push_back(f);
      }
      std::size_t yes = 0;
      bool complete = true;
      for (std::size_t n = std::max<std::size_t>(min_n, 3); n <= max_n; ++n) {
        c.min_n = c.max_n = n;
        const auto r = ds_pair_search(c);
        Json j = to_json(r);
        j["n"] = n;
        emit(j);
        yes += r.yes_pairs.size();
        complete = complete && r.complete;
      }
      emit({{"summary", true}, {"yes_pairs", yes}, {"complete", complete}});
      if (yes) return kAssert;
    } else if (*sf) {
      const auto kind = parse_base_kind(base);
      if (!kind) throw UsageError("unknown base: " + base);
      const auto [lo, hi] = parse_range(m_range);
      const TreeTData tree = tree_from(tree_file);
      bool ok = true;
      for (std::size_t m = lo; m <= hi; ++m) {
        const auto r = snf_family_experiment(*kind, m, m, seed, tree);
        for (const auto& inst : r.instances) {
          emit(to_json(inst));
          ok = ok && inst.pass();
        }
      }
      if (!ok) return kAssert;
    } else if (*dx) {
      const auto [lo, hi] = parse_range(n_range);
      const auto r = ds_determined_assertions(family, lo, hi, seed);
      emit(to_json(r));
      if (!r.violations.empty()) return kAssert;
    } else if (*iv) {
      emit(to_json(invariants_report(load_graph(graph), walks)));
    } else if (*vd) {
      return validate_data(dir.empty() ? data_dir() : dir);
    } else if (*cn) {
      std::vector<Graph> gs;
      if (all_flag && fs::exists(resolve(graph))) gs = read_graphs(resolve(graph));
      else gs.push_back(load_graph(graph));
      for (const auto& g : gs) {
        const auto c = canonical_form(g);
        emit({{"certificate", c.certificate}, {"labeling", c.labeling}});
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "degsim: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "degsim: " << e.what() << "\n";
    return kData;
  } catch (const ParseError& e) {
    std::cerr << "degsim: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "degsim: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "degsim: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}
