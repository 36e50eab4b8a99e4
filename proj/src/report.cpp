#include "degsim/report.hpp"

namespace degsim {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const UniPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_string(x));
  return {{"coeffs", c}, {"text", p.to_string()}};
}

Json to_json(const BiPoly& p, const std::string& second) {
  Json rows = Json::array();
  for (const auto& row : p.dense()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return {{"coeffs", rows}, {"text", p.to_string("t", second)}};
}

Json to_json(const TPoly& p) { return to_json(p.to_bipoly()); }

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const SNFResult& s) {
  Json f = Json::array();
  for (const auto& p : s.primitive_factors) f.push_back(to_json(p));
  return {{"invariant_factors", f}};
}

Json to_json(const SpectralProfile& p) {
  Json j{{"charA", to_json(p.charA)}, {"charL", to_json(p.charL)}, {"charQ", to_json(p.charQ)}};
  j["charN"] = p.charN ? to_json(*p.charN) : Json(nullptr);
  j["mu_poly"] = to_json(p.mu_poly);
  j["alpha_poly"] = to_json(p.alpha_poly, "alpha");
  j["charA_complement"] = to_json(p.charA_complement);
  return j;
}

Json to_json(const InvariantsReport& r) {
  Json walks = Json::array();
  for (const auto& w : r.walks) walks.push_back(to_string(w));
  return {{"vertices", r.vertices},
          {"edges", r.edges},
          {"isolated", r.isolated},
          {"components", r.components},
          {"bipartite_components", r.bipartite_components},
          {"girth", r.girth},
          {"spanning_trees", to_string(r.spanning_trees)},
          {"walks", walks}};
}

Json to_json(const DsDecision& d) {
  Json j{{"verdict", to_string(d.verdict)}, {"basis_dim", d.basis_dim}, {"method", d.method}};
  j["error_bound"] = d.error_bound_log2 ? Json("2^" + std::to_string(static_cast<long long>(*d.error_bound_log2)))
                                        : Json(nullptr);
  j["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
  if (d.zero_block_degree) j["zero_block_degree"] = *d.zero_block_degree;
  j["seed"] = d.seed;
  return j;
}

Json to_json(const SrgParams& p) { return {{"n", p.n}, {"d", p.d}, {"a", p.a}, {"c", p.c}}; }

Json to_json(const SweepReport& r) {
  Json j{{"psi_distinct", r.psi_distinct}, {"iso_classes", r.iso_classes}, {"checked", r.checked},
         {"cliques", r.cliques}};
  j["complement_psi_distinct"] = r.complement_psi_distinct ? Json(*r.complement_psi_distinct) : Json(nullptr);
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  Json j{{"ok", r.ok()}, {"checks", checks}};
  if (!r.ok()) j["first_failure"] = r.first_failure();
  return j;
}

Json to_json(const ImplicationAudit& a) {
  Json j;
  j["degree_similar"] = a.degree_similar ? Json(*a.degree_similar) : Json(nullptr);
  j["snf_equal"] = a.snf_equal;
  j["mu_cospectral"] = a.mu_cospectral;
  j["alqn_cospectral"] = a.alqn_cospectral;
  j["alpha_cospectral"] = a.alpha_cospectral;
  j["a_complement_cospectral"] = a.a_complement_cospectral;
  j["connected"] = a.connected;
  j["violations"] = a.violations;
  return j;
}

namespace {
Json pair_json(const CandidatePair& p) {
  return {{"n", p.n}, {"g1", p.g1}, {"g2", p.g2}, {"verdict", to_string(p.verdict)}};
}
}  // namespace

Json to_json(const SearchReport& r) {
  Json orders = Json::array();
  for (const auto& o : r.orders) {
    Json f = Json::array();
    for (const auto& s : o.filters)
      f.push_back({{"filter", s.filter}, {"buckets", s.buckets}, {"graphs", s.graphs}, {"pairs", s.pairs}});
    orders.push_back({{"n", o.n}, {"classes", o.classes}, {"filters", f}, {"oracle_calls", o.oracle_calls}});
  }
  Json yes = Json::array();
  for (const auto& p : r.yes_pairs) yes.push_back(pair_json(p));
  std::size_t calls = 0;
  for (const auto& o : r.orders) calls += o.oracle_calls;
  return {{"complete", r.complete},   {"orders", orders},           {"oracle_calls", calls},
          {"yes_pairs", yes},         {"psi_equal_pairs", r.psi_equal_pairs}};
}

Json to_json(const FamilyInstance& i) {
  return {{"label", i.label},       {"n", i.n},
          {"psi_equal", i.psi_equal}, {"snf_equal", i.snf_equal},
          {"snf_shape", i.snf_shape}, {"dn1_is_one", i.dn1_is_one},
          {"dn1", i.dn1},             {"shape_required", i.require_shape},
          {"degree_similar", to_string(i.verdict)}, {"pass", i.pass()}};
}

Json to_json(const FamilyDsReport& r) {
  return {{"family", r.family},
          {"members", r.members},
          {"comparisons", r.comparisons},
          {"violations", r.violations}};
}

}  // namespace degsim
