#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degsim/rational.hpp"
#include "degsim/unipoly.hpp"

namespace degsim {

/// Dense polynomial in two variables (t, mu) over Q.
///
/// Stored as a polynomial in t whose coefficients are polynomials in mu;
/// trailing zero t-coefficients are trimmed, so the zero polynomial is empty.
/// The second variable is called mu throughout, but the same type holds the
/// alpha-polynomial in (t, alpha).
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  /// From coefficients indexed [t-degree][mu-degree].
  explicit BiPoly(const std::vector<std::vector<Rational>>& coeffs);
  /// From mu-polynomial coefficients of t^0, t^1, ...
  explicit BiPoly(std::vector<UniPoly> t_coeffs);

  static BiPoly t();
  static BiPoly mu();
  /// Embeds a univariate polynomial in t.
  static BiPoly from_t(const UniPoly& p);
  /// Embeds a univariate polynomial in mu.
  static BiPoly from_mu(const UniPoly& p);

  bool is_zero() const { return rows_.empty(); }
  int deg_t() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_mu() const;
  int total_degree() const;
  /// Coefficient of t^i mu^j.
  Rational coeff(std::size_t i, std::size_t j) const;
  /// Coefficient of t^i as a polynomial in mu.
  const UniPoly& t_coeff(std::size_t i) const;
  const std::vector<UniPoly>& t_coeffs() const { return rows_; }
  /// Dense rectangular coefficient array [t-degree][mu-degree].
  std::vector<std::vector<Rational>> dense() const;

  Rational eval(const Rational& t, const Rational& mu) const;
  /// Univariate polynomial in t obtained by fixing mu.
  UniPoly at_mu(const Rational& mu) const;
  /// Univariate polynomial in mu obtained by fixing t.
  UniPoly at_t(const Rational& t) const;
  /// p(-t, mu).
  BiPoly negate_t() const;

  /// Primitive integer representative: coprime integer coefficients and a
  /// positive coefficient on the graded-lex (t > mu) leading term.
  BiPoly normalized() const;
  /// Leading monomial (t-degree, mu-degree) in graded-lex order with t > mu.
  std::pair<int, int> leading_monomial() const;
  BiPoly scaled(const Rational& s) const;
  std::size_t bit_size() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Canonical text: decreasing t-degree, then decreasing mu-degree.
  std::string to_string(const std::string& tvar = "t", const std::string& muvar = "mu") const;

 private:
  void trim();
  std::vector<UniPoly> rows_;
};

/// Exact quotient a / b in Q[t, mu], or nullopt if b does not divide a.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

/// gcd in Q[t, mu], normalized as in BiPoly::normalized().
/// Throws std::domain_error if both arguments are zero.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Content with respect to t: monic gcd in Q[mu] of the t-coefficients.
UniPoly content_t(const BiPoly& p);

}  // namespace degsim
