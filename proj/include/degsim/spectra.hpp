#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degsim/bipoly.hpp"
#include "degsim/graph.hpp"
#include "degsim/snf.hpp"
#include "degsim/unipoly.hpp"

namespace degsim {

struct SpectralProfile {
  UniPoly charA, charL, charQ;
  std::optional<UniPoly> charN;  // absent when g has isolated vertices
  BiPoly mu_poly;                // psi(t, mu) = det(tI - A + mu D)
  BiPoly alpha_poly;             // phi(t, alpha) = det(tI - A - alpha J), second variable is alpha
  UniPoly charA_complement;
};

/// tI - A + mu D as a matrix of bivariate polynomials.
BiPolyMatrix mu_matrix(const Graph& g);
BiPoly mu_polynomial(const Graph& g);
/// Throws std::logic_error if the alpha-degree exceeds 1.
BiPoly alpha_polynomial(const Graph& g);

UniPoly char_poly_integer(const IntMatrix& m);
UniPoly char_poly_adjacency(const Graph& g);
UniPoly char_poly_laplacian(const Graph& g);
UniPoly char_poly_signless(const Graph& g);
/// Characteristic polynomial of D^-1 A (same spectrum as the normalized
/// adjacency). Throws std::domain_error on an isolated vertex.
UniPoly char_poly_normalized(const Graph& g);

SpectralProfile spectral_profile(const Graph& g);

enum class CospectralMode { A, L, Q, N, AComplement, Alpha, Mu };
std::optional<CospectralMode> parse_cospectral_mode(const std::string& s);
std::string to_string(CospectralMode m);

/// Throws std::domain_error for mode N when either graph has an isolated vertex.
bool cospectral(const Graph& g1, const Graph& g2, CospectralMode mode);

/// Smith form of tI - L_mu(g) over Q(mu)[t].
SNFResult mu_snf(const Graph& g);

struct JohnsonNewmanAudit {
  bool alpha_all = false;        // phi equal as polynomials in (t, alpha)
  bool alpha_two = false;        // phi equal at alpha = 1 and alpha = 2
  bool a_and_complement = false; // charA and charA of complements equal
  bool orthogonal_implied = false;
  bool consistent = false;       // the first three agree
};
JohnsonNewmanAudit johnson_newman_audit(const Graph& g1, const Graph& g2);

struct ImplicationAudit {
  std::optional<bool> degree_similar;  // supplied by the caller
  bool snf_equal = false;
  bool mu_cospectral = false;
  bool alqn_cospectral = false;  // N skipped when a graph has isolated vertices
  bool alpha_cospectral = false;
  bool a_complement_cospectral = false;
  bool connected = false;  // g1 or g2 connected
  std::vector<std::string> violations;
};
ImplicationAudit implication_audit(const Graph& g1, const Graph& g2, std::optional<bool> degree_similar);

}  // namespace degsim
