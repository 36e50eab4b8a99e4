#include "degsim/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace degsim {

BiPoly::BiPoly(long c) {
  if (c != 0) rows_.emplace_back(c);
}

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) rows_.emplace_back(c);
}

BiPoly::BiPoly(const std::vector<std::vector<Rational>>& coeffs) {
  rows_.reserve(coeffs.size());
  for (const auto& row : coeffs) rows_.emplace_back(row);
  trim();
}

BiPoly::BiPoly(std::vector<UniPoly> t_coeffs) : rows_(std::move(t_coeffs)) { trim(); }

BiPoly BiPoly::t() { return BiPoly(std::vector<UniPoly>{UniPoly(), UniPoly(1)}); }

BiPoly BiPoly::mu() { return BiPoly(std::vector<UniPoly>{UniPoly::variable()}); }

BiPoly BiPoly::from_t(const UniPoly& p) {
  std::vector<UniPoly> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.emplace_back(c);
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::from_mu(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BiPoly::deg_mu() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].is_zero()) d = std::max(d, static_cast<int>(i) + rows_[i].degree());
  return d;
}

Rational BiPoly::coeff(std::size_t i, std::size_t j) const {
  return i < rows_.size() ? rows_[i].coeff(j) : Rational(0);
}

const UniPoly& BiPoly::t_coeff(std::size_t i) const {
  static const UniPoly kZero;
  return i < rows_.size() ? rows_[i] : kZero;
}

std::vector<std::vector<Rational>> BiPoly::dense() const {
  const int dm = deg_mu();
  std::vector<std::vector<Rational>> out(rows_.size(), std::vector<Rational>(static_cast<std::size_t>(dm + 1), Rational(0)));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].coeffs().size(); ++j) out[i][j] = rows_[i].coeffs()[j];
  return out;
}

Rational BiPoly::eval(const Rational& t, const Rational& mu) const {
  Rational acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * t + it->eval(mu);
  return acc;
}

UniPoly BiPoly::at_mu(const Rational& mu) const {
  std::vector<Rational> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r.eval(mu));
  return UniPoly(std::move(c));
}

UniPoly BiPoly::at_t(const Rational& t) const {
  UniPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * UniPoly(t) + *it;
  return acc;
}

BiPoly BiPoly::negate_t() const {
  BiPoly r = *this;
  for (std::size_t i = 1; i < r.rows_.size(); i += 2) r.rows_[i] = -r.rows_[i];
  return r;
}

std::pair<int, int> BiPoly::leading_monomial() const {
  std::pair<int, int> best{-1, -1};
  int best_total = -1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].is_zero()) continue;
    const int j = rows_[i].degree();
    const int total = static_cast<int>(i) + j;
    if (total > best_total || (total == best_total && static_cast<int>(i) > best.first)) {
      best_total = total;
      best = {static_cast<int>(i), j};
    }
  }
  return best;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& r : rows_)
    for (const auto& c : r.coeffs()) {
      if (c == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  auto [li, lj] = leading_monomial();
  if (coeff(static_cast<std::size_t>(li), static_cast<std::size_t>(lj)) < 0) scale = -scale;
  return scaled(scale);
}

BiPoly BiPoly::scaled(const Rational& s) const {
  if (s == 0) return BiPoly();
  BiPoly r = *this;
  for (auto& row : r.rows_) row = row.scaled(s);
  return r;
}

std::size_t BiPoly::bit_size() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.bit_size();
  return total;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      if (b.rows_[j].is_zero()) continue;
      out[i + j] += a.rows_[i] * b.rows_[j];
    }
  }
  return BiPoly(std::move(out));
}

std::string BiPoly::to_string(const std::string& tvar, const std::string& muvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_t(); i >= 0; --i) {
    const UniPoly& row = rows_[static_cast<std::size_t>(i)];
    for (int j = row.degree(); j >= 0; --j) {
      const Rational& c = row.coeffs()[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      if (mag != 1 || (i == 0 && j == 0)) factors.push_back(mag.get_str());
      if (i > 0) factors.push_back(i > 1 ? tvar + "^" + std::to_string(i) : tvar);
      if (j > 0) factors.push_back(j > 1 ? muvar + "^" + std::to_string(j) : muvar);
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
  }
  return os.str();
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  if (a.is_zero()) return BiPoly();
  if (a.deg_t() < b.deg_t()) return std::nullopt;
  std::vector<UniPoly> rem = a.t_coeffs();
  const auto db = static_cast<std::size_t>(b.deg_t());
  const UniPoly& lead = b.t_coeff(db);
  std::vector<UniPoly> quo(static_cast<std::size_t>(a.deg_t() - b.deg_t() + 1));
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem[k + db].is_zero()) continue;
    auto [q, r] = divmod(rem[k + db], lead);
    if (!r.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.t_coeff(j);
    quo[k] = std::move(q);
  }
  for (std::size_t j = 0; j < db; ++j)
    if (!rem[j].is_zero()) return std::nullopt;
  return BiPoly(std::move(quo));
}

UniPoly content_t(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p.t_coeffs()) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

namespace {

BiPoly divide_by_content(const BiPoly& p, const UniPoly& c) {
  std::vector<UniPoly> rows;
  rows.reserve(p.t_coeffs().size());
  for (const auto& r : p.t_coeffs()) rows.push_back(divmod(r, c).first);
  return BiPoly(std::move(rows)).normalized();
}

BiPoly primitive_part(const BiPoly& p) { return divide_by_content(p, content_t(p)); }

// Pseudo-remainder of a by b with respect to t (up to a factor in Q[mu]).
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const int db = b.deg_t();
  const UniPoly& lb = b.t_coeff(static_cast<std::size_t>(db));
  while (!a.is_zero() && a.deg_t() >= db) {
    const int shift = a.deg_t() - db;
    const UniPoly la = a.t_coeff(static_cast<std::size_t>(a.deg_t()));
    std::vector<UniPoly> mono(static_cast<std::size_t>(shift + 1));
    mono.back() = la;
    a = BiPoly::from_mu(lb) * a - BiPoly(std::move(mono)) * b;
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const UniPoly ca = content_t(a);
  const UniPoly cb = content_t(b);
  BiPoly pa = divide_by_content(a, ca);
  BiPoly pb = divide_by_content(b, cb);
  if (pa.deg_t() < pb.deg_t()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.deg_t() == 0) {
      pa = BiPoly(1);
      break;
    }
    BiPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? BiPoly() : primitive_part(r);
  }
  return (pa * BiPoly::from_mu(gcd(ca, cb))).normalized();
}

}  // namespace degsim
