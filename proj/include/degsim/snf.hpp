#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "degsim/bipoly.hpp"
#include "degsim/linalg.hpp"
#include "degsim/ratfunc.hpp"

namespace degsim {

/// Polynomial in t with coefficients in Q(mu).
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c) : TPoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  TPoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<RatFunc> coeffs);
  static TPoly from_bipoly(const BiPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& leading() const { return coeffs_.back(); }
  std::size_t bit_size() const;

  TPoly monic() const;
  /// Clears mu-denominators: the unique primitive integer form in Q[t, mu]
  /// with positive graded-lex leading coefficient.
  BiPoly to_bipoly() const;

  TPoly operator-() const;
  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFunc> coeffs_;
};

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);

/// Rectangular matrix over Q(mu)[t].
using PolyMatrix = Matrix<TPoly>;

PolyMatrix to_poly_matrix(const BiPolyMatrix& m);

struct SNFResult {
  /// Monic in t over Q(mu); zero factors (rank deficiency) are the zero polynomial.
  std::vector<TPoly> invariant_factors;
  /// Same factors as primitive integer polynomials in (t, mu).
  std::vector<BiPoly> primitive_factors;
};

/// Smith normal form over the Euclidean domain Q(mu)[t].
///
/// Units (entries free of t) are eliminated first, sparsest first. The
/// remaining s x s block goes through determinant divisors when C(2s, s) is
/// small, else through Euclidean reduction with pivot of least t-degree, then
/// least coefficient bit size, then Markowitz count, then row-major order.
SNFResult snf(PolyMatrix m);

struct DeterminantDivisorOptions {
  /// Largest number of (row subset, column subset) pairs enumerated directly.
  std::size_t minor_limit = 1'000'000;
  /// Above the limit, derive D_k from the Smith form instead of failing.
  bool snf_fallback = true;
};

/// D_k: gcd of all k x k minors, monic in t over Q(mu).
/// Throws std::invalid_argument for k out of range and std::runtime_error when
/// the minor limit is exceeded without fallback.
TPoly determinant_divisor(const PolyMatrix& m, std::size_t k, const DeterminantDivisorOptions& options = {});

}  // namespace degsim
