#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degsim/rational.hpp"

namespace degsim {

/// Dense univariate polynomial over Q; coefficient index = degree.
/// The zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally in formulas
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The polynomial x.
  static UniPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  Rational eval(const Rational& x) const;
  UniPoly monic() const;
  /// Integer-coefficient primitive representative with positive leading coefficient.
  UniPoly primitive() const;
  /// p(-x).
  UniPoly negate_variable() const;
  UniPoly scaled(const Rational& s) const;
  std::size_t bit_size() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Canonical text, decreasing degree, e.g. "t^2 - 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient if b divides a.
bool divides(const UniPoly& b, const UniPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Content of an integer-valued or rational polynomial as a positive rational
/// such that p / content has coprime integer coefficients.
Rational content(const UniPoly& p);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace degsim
