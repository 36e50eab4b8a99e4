#include "degsim/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degsim {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  UniPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = c;
  return p;
}

UniPoly UniPoly::variable() { return monomial(Rational(1), 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  if (leading() == 1) return *this;
  return scaled(1 / leading());
}

Rational content(const UniPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Rational c = content(*this);
  if (leading() < 0) c = -c;
  return scaled(1 / c);
}

UniPoly UniPoly::negate_variable() const {
  UniPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UniPoly UniPoly::scaled(const Rational& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::size_t UniPoly::bit_size() const {
  std::size_t total = 0;
  for (const auto& c : coeffs_) total += degsim::bit_size(c);
  return total;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  UniPoly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + db] * inv_lead;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

bool divides(const UniPoly& b, const UniPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  // Euclid on integer-primitive representatives keeps coefficients small.
  UniPoly x = a.primitive();
  UniPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational den = xs[i] - xs[i - level];
      if (den == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly(std::vector<Rational>{-xs[i], Rational(1)}) + UniPoly(dd[i]);
  }
  return result;
}

}  // namespace degsim
