#include "degsim/spectra.hpp"

#include <stdexcept>

namespace degsim {

namespace {

IntMatrix shifted(const IntMatrix& base, const IntMatrix& lin, long t, long s) {
  // t I - base + s lin
  const std::size_t n = base.rows();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = s * lin(i, j) - base(i, j);
      if (i == j) m(i, j) += t;
    }
  return m;
}

// det(tI - base + s*lin) as a polynomial in (t, s), degrees <= (n, ds).
BiPoly det_grid(const IntMatrix& base, const IntMatrix& lin, std::size_t ds) {
  const std::size_t n = base.rows();
  std::vector<Rational> tx(n + 1), sx(ds + 1), vals(n + 1), cvals(ds + 1);
  for (std::size_t i = 0; i <= n; ++i) tx[i] = static_cast<long>(i);
  for (std::size_t j = 0; j <= ds; ++j) sx[j] = static_cast<long>(j);
  std::vector<UniPoly> by_s;
  for (std::size_t j = 0; j <= ds; ++j) {
    for (std::size_t i = 0; i <= n; ++i)
      vals[i] = det_integer(shifted(base, lin, static_cast<long>(i), static_cast<long>(j)));
    by_s.push_back(interpolate(tx, vals));
  }
  std::vector<UniPoly> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= ds; ++j) cvals[j] = by_s[j].coeff(i);
    rows[i] = interpolate(sx, cvals);
  }
  return BiPoly(std::move(rows));
}

}  // namespace

BiPolyMatrix mu_matrix(const Graph& g) {
  const std::size_t n = g.order();
  BiPolyMatrix m(n, n, BiPoly(0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v)
        m(u, u) = BiPoly::t() + BiPoly::mu().scaled(Rational(static_cast<long>(g.degree(u))));
      else if (g.adjacent(u, v))
        m(u, v) = BiPoly(-1);
    }
  return m;
}

BiPoly mu_polynomial(const Graph& g) {
  if (g.order() == 0) return BiPoly(1);
  return det_grid(g.adjacency_matrix(), g.degree_matrix(), g.order());
}

BiPoly alpha_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return BiPoly(1);
  // tI - A - aJ; three values of the second variable
  // so a stray quadratic term would be caught.
  IntMatrix negj(n, n, Integer(-1));
  BiPoly p = det_grid(g.adjacency_matrix(), negj, 2);
  if (p.deg_mu() > 1) throw std::logic_error("alpha_polynomial: alpha-degree exceeds 1");
  return p;
}

UniPoly char_poly_integer(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly_integer: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix zero(n, n, Integer(0));
  std::vector<Rational> xs(n + 1), ys(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = static_cast<long>(i);
    ys[i] = det_integer(shifted(m, zero, static_cast<long>(i), 0));
  }
  return interpolate(xs, ys);
}

UniPoly char_poly_adjacency(const Graph& g) { return char_poly_integer(g.adjacency_matrix()); }

UniPoly char_poly_laplacian(const Graph& g) { return char_poly_integer(g.degree_matrix() - g.adjacency_matrix()); }

UniPoly char_poly_signless(const Graph& g) { return char_poly_integer(g.degree_matrix() + g.adjacency_matrix()); }

UniPoly char_poly_normalized(const Graph& g) {
  const std::size_t n = g.order();
  RatMatrix m(n, n, Rational(0));
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t d = g.degree(u);
    if (d == 0) throw std::domain_error("normalized spectrum undefined: vertex " + std::to_string(u) + " is isolated");
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) m(u, v) = make_rational(1, static_cast<long>(d));
  }
  return char_poly_rational(m);
}

namespace {

bool has_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace

SpectralProfile spectral_profile(const Graph& g) {
  SpectralProfile p;
  p.charA = char_poly_adjacency(g);
  p.charL = char_poly_laplacian(g);
  p.charQ = char_poly_signless(g);
  if (!has_isolated(g) && g.order() > 0) p.charN = char_poly_normalized(g);
  p.mu_poly = mu_polynomial(g);
  p.alpha_poly = alpha_polynomial(g);
  p.charA_complement = char_poly_adjacency(complement(g));
  return p;
}

std::optional<CospectralMode> parse_cospectral_mode(const std::string& s) {
  if (s == "A") return CospectralMode::A;
  if (s == "L") return CospectralMode::L;
  if (s == "Q") return CospectralMode::Q;
  if (s == "N") return CospectralMode::N;
  if (s == "A-and-complement" || s == "AAc") return CospectralMode::AComplement;
  if (s == "alpha") return CospectralMode::Alpha;
  if (s == "mu") return CospectralMode::Mu;
  return std::nullopt;
}

std::string to_string(CospectralMode m) {
  switch (m) {
    case CospectralMode::A: return "A";
    case CospectralMode::L: return "L";
    case CospectralMode::Q: return "Q";
    case CospectralMode::N: return "N";
    case CospectralMode::AComplement: return "A-and-complement";
    case CospectralMode::Alpha: return "alpha";
    case CospectralMode::Mu: return "mu";
  }
  return "?";
}

bool cospectral(const Graph& g1, const Graph& g2, CospectralMode mode) {
  if (g1.order() != g2.order()) {
    if (mode == CospectralMode::N && (has_isolated(g1) || has_isolated(g2)))
      throw std::domain_error("N-cospectrality needs graphs without isolated vertices");
    return false;
  }
  switch (mode) {
    case CospectralMode::A: return char_poly_adjacency(g1) == char_poly_adjacency(g2);
    case CospectralMode::L: return char_poly_laplacian(g1) == char_poly_laplacian(g2);
    case CospectralMode::Q: return char_poly_signless(g1) == char_poly_signless(g2);
    case CospectralMode::N: {
      if (has_isolated(g1) || has_isolated(g2))
        throw std::domain_error("N-cospectrality needs graphs without isolated vertices");
      return char_poly_normalized(g1) == char_poly_normalized(g2);
    }
    case CospectralMode::AComplement:
      return char_poly_adjacency(g1) == char_poly_adjacency(g2) &&
             char_poly_adjacency(complement(g1)) == char_poly_adjacency(complement(g2));
    case CospectralMode::Alpha: return alpha_polynomial(g1) == alpha_polynomial(g2);
    case CospectralMode::Mu: return mu_polynomial(g1) == mu_polynomial(g2);
  }
  return false;
}

SNFResult mu_snf(const Graph& g) { return snf(to_poly_matrix(mu_matrix(g))); }

JohnsonNewmanAudit johnson_newman_audit(const Graph& g1, const Graph& g2) {
  JohnsonNewmanAudit r;
  if (g1.order() == g2.order()) {
    const BiPoly p1 = alpha_polynomial(g1), p2 = alpha_polynomial(g2);
    r.alpha_all = p1 == p2;
    r.alpha_two = p1.at_mu(1) == p2.at_mu(1) && p1.at_mu(2) == p2.at_mu(2);
    r.a_and_complement = cospectral(g1, g2, CospectralMode::AComplement);
  }
  r.orthogonal_implied = r.a_and_complement;
  r.consistent = r.alpha_all == r.alpha_two && r.alpha_two == r.a_and_complement;
  return r;
}

ImplicationAudit implication_audit(const Graph& g1, const Graph& g2, std::optional<bool> degree_similar) {
  ImplicationAudit r;
  r.degree_similar = degree_similar;
  r.connected = is_connected(g1) || is_connected(g2);
  if (g1.order() == g2.order()) {
    r.mu_cospectral = mu_polynomial(g1) == mu_polynomial(g2);
    const SNFResult s1 = mu_snf(g1), s2 = mu_snf(g2);
    r.snf_equal = s1.invariant_factors == s2.invariant_factors;
    r.alqn_cospectral = cospectral(g1, g2, CospectralMode::A) && cospectral(g1, g2, CospectralMode::L) &&
                        cospectral(g1, g2, CospectralMode::Q);
    if (r.alqn_cospectral && !has_isolated(g1) && !has_isolated(g2))
      r.alqn_cospectral = cospectral(g1, g2, CospectralMode::N);
    r.alpha_cospectral = alpha_polynomial(g1) == alpha_polynomial(g2);
    r.a_complement_cospectral = cospectral(g1, g2, CospectralMode::AComplement);
  }
  auto need = [&](bool premise, bool conclusion, const char* what) {
    if (premise && !conclusion) r.violations.emplace_back(what);
  };
  const bool ds = degree_similar.value_or(false);
  need(ds, r.snf_equal, "degree-similar but SNFs differ");
  need(r.snf_equal, r.mu_cospectral, "SNF-equal but mu-polynomials differ");
  need(r.mu_cospectral, r.alqn_cospectral, "mu-cospectral but not (A,L,Q,N)-cospectral");
  need(ds && r.connected, r.alpha_cospectral, "degree-similar and connected but not A_alpha-cospectral");
  need(r.alpha_cospectral, r.a_complement_cospectral, "A_alpha-cospectral but not (A,A^c)-cospectral");
  need(r.a_complement_cospectral, r.alpha_cospectral, "(A,A^c)-cospectral but not A_alpha-cospectral");
  return r;
}

}  // namespace degsim
