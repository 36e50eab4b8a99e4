#pragma once

#include <optional>
#include <vector>

#include "degsim/bipoly.hpp"
#include "degsim/matrix.hpp"
#include "degsim/rational.hpp"
#include "degsim/unipoly.hpp"

namespace degsim {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using BiPolyMatrix = Matrix<BiPoly>;

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for a non-square matrix.
Integer det_integer(IntMatrix m);

/// Exact determinant of a rational matrix (row denominators cleared, then Bareiss).
Rational det_rational(const RatMatrix& m);

/// Inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Basis of {x : m x = 0}, one vector per element; each vector is scaled to
/// coprime integers.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

/// Characteristic polynomial det(tI - m), by evaluation at n+1 integer points
/// and interpolation.
UniPoly char_poly_rational(const RatMatrix& m);

/// Sum over rows of the largest entry degree (a valid bound on det degree).
std::pair<int, int> det_degree_bounds(const BiPolyMatrix& m);

/// Exact bivariate determinant by evaluation on a (deg_t+1) x (deg_mu+1)
/// integer grid and dense interpolation. The result is checked at an
/// off-grid point; std::runtime_error signals an exceeded degree bound.
BiPoly det_bipoly(const BiPolyMatrix& m, int deg_t_bound, int deg_mu_bound);
BiPoly det_bipoly(const BiPolyMatrix& m);

}  // namespace degsim
