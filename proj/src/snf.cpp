#include "degsim/snf.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace degsim {

namespace {
// Largest C(2s, s) for which a unit-free block is finished through minors.
constexpr std::size_t kDivisorBlockLimit = 20000;
}  // namespace

TPoly::TPoly(const RatFunc& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

TPoly::TPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::from_bipoly(const BiPoly& p) {
  std::vector<RatFunc> c;
  c.reserve(p.t_coeffs().size());
  for (const auto& row : p.t_coeffs()) c.emplace_back(row);
  return TPoly(std::move(c));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t TPoly::bit_size() const {
  std::size_t total = 0;
  for (const auto& c : coeffs_) total += c.bit_size();
  return total;
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  if (leading() == RatFunc(1)) return *this;
  const RatFunc inv = leading().inverse();
  std::vector<RatFunc> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x * inv);
  return TPoly(std::move(c));
}

BiPoly TPoly::to_bipoly() const {
  UniPoly lcm(1);
  for (const auto& c : coeffs_) {
    if (c.is_polynomial()) continue;
    const UniPoly g = gcd(lcm, c.den());
    lcm = divmod(lcm * c.den(), g).first;
  }
  std::vector<UniPoly> rows;
  rows.reserve(coeffs_.size());
  for (const auto& c : coeffs_) rows.push_back(divmod(c.num() * lcm, c.den()).first);
  return BiPoly(std::move(rows)).normalized();
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return TPoly(std::move(c));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  std::vector<RatFunc> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TPoly(std::move(c));
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const RatFunc& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (i > 0) os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(mu)[t]");
  if (a.degree() < b.degree()) return {TPoly(), a};
  std::vector<RatFunc> rem = a.coeffs();
  std::vector<RatFunc> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  const bool unit_lead = b.leading() == RatFunc(1);
  const RatFunc inv = unit_lead ? RatFunc(1) : b.leading().inverse();
  for (std::size_t k = quo.size(); k-- > 0;) {
    if (rem[k + db].is_zero()) continue;
    RatFunc q = unit_lead ? rem[k + db] : rem[k + db] * inv;
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      rem[k + j] -= q * b.coeffs()[j];
    }
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {TPoly(std::move(quo)), TPoly(std::move(rem))};
}

PolyMatrix to_poly_matrix(const BiPolyMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = TPoly::from_bipoly(m(i, j));
  return p;
}

namespace {

void swap_rows(PolyMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(PolyMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row_i -= q * row_k over columns from `from`.
void row_axpy(PolyMatrix& a, std::size_t i, std::size_t k, const TPoly& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j) {
    if (a(k, j).is_zero()) continue;
    a(i, j) = a(i, j) - q * a(k, j);
  }
}

void col_axpy(PolyMatrix& a, std::size_t j, std::size_t k, const TPoly& q, std::size_t from) {
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (a(i, k).is_zero()) continue;
    a(i, j) = a(i, j) - q * a(i, k);
  }
}

bool select_pivot(const PolyMatrix& a, std::size_t k, std::size_t& pr, std::size_t& pc) {
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<std::size_t> row_nz(R, 0), col_nz(C, 0);
  for (std::size_t i = k; i < R; ++i)
    for (std::size_t j = k; j < C; ++j)
      if (!a(i, j).is_zero()) {
        ++row_nz[i];
        ++col_nz[j];
      }
  bool found = false;
  std::tuple<int, std::size_t, std::size_t> best{};
  for (std::size_t i = k; i < R; ++i)
    for (std::size_t j = k; j < C; ++j) {
      const TPoly& x = a(i, j);
      if (x.is_zero()) continue;
      std::tuple<int, std::size_t, std::size_t> key{x.degree(), x.bit_size(), (row_nz[i] - 1) * (col_nz[j] - 1)};
      if (!found || key < best) {
        best = key;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

long double binomial(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

BiPolyMatrix clear_denominators(const PolyMatrix& m) {
  BiPolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    UniPoly lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& c : m(i, j).coeffs()) {
        if (c.is_polynomial()) continue;
        lcm = divmod(lcm * c.den(), gcd(lcm, c.den())).first;
      }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<UniPoly> rows;
      for (const auto& c : m(i, j).coeffs()) rows.push_back(divmod(c.num() * lcm, c.den()).first);
      out(i, j) = BiPoly(std::move(rows));
    }
  }
  return out;
}

// gcd of all k x k minors of m (0 if they all vanish). Stops early once
// the gcd is free of t, returning 1.
BiPoly minor_gcd(const BiPolyMatrix& m, std::size_t k) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> rows(k), cols(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  BiPoly g;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      const BiPoly minor = det_bipoly(m.select(rows, cols));
      if (minor.is_zero()) continue;
      g = g.is_zero() ? minor.normalized() : gcd(g, minor);
      if (g.deg_t() == 0) return BiPoly(1);
    } while (next_combination(cols, C));
  } while (next_combination(rows, R));
  return g;
}

// Euclidean elimination from step k on; appends the diagonal it produces.
void euclidean_snf(PolyMatrix& a, std::size_t k0, std::vector<TPoly>& diag) {
  const std::size_t R = a.rows(), C = a.cols();
  const std::size_t r = std::min(R, C);
  for (std::size_t k = k0; k < r; ++k) {
    std::size_t pr = k, pc = k;
    if (!select_pivot(a, k, pr, pc)) break;
    swap_rows(a, k, pr);
    swap_cols(a, k, pc);
    while (true) {
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (a(i, k).is_zero()) continue;
        auto q = divmod(a(i, k), a(k, k)).first;
        row_axpy(a, i, k, q, k);
        if (!a(i, k).is_zero()) clean = false;
      }
      if (clean) {
        for (std::size_t j = k + 1; j < C; ++j) {
          if (a(k, j).is_zero()) continue;
          auto q = divmod(a(k, j), a(k, k)).first;
          col_axpy(a, j, k, q, k);
          if (!a(k, j).is_zero()) clean = false;
        }
      }
      if (!clean) {
        // A remainder of lower degree appeared in row k or column k.
        std::size_t best_i = k, best_j = k;
        int best_deg = a(k, k).degree();
        for (std::size_t i = k + 1; i < R; ++i)
          if (!a(i, k).is_zero() && a(i, k).degree() < best_deg) {
            best_deg = a(i, k).degree();
            best_i = i;
            best_j = k;
          }
        for (std::size_t j = k + 1; j < C; ++j)
          if (!a(k, j).is_zero() && a(k, j).degree() < best_deg) {
            best_deg = a(k, j).degree();
            best_i = k;
            best_j = j;
          }
        swap_rows(a, k, best_i);
        swap_cols(a, k, best_j);
        continue;
      }
      // Row and column k are clear; enforce divisibility of the remainder.
      bool divisible = true;
      if (a(k, k).degree() > 0) {
        for (std::size_t i = k + 1; i < R && divisible; ++i)
          for (std::size_t j = k + 1; j < C; ++j) {
            if (a(i, j).is_zero()) continue;
            if (!divmod(a(i, j), a(k, k)).second.is_zero()) {
              row_axpy(a, k, i, TPoly(-1), k);
              divisible = false;
              break;
            }
          }
      }
      if (divisible) break;
    }
    diag.push_back(a(k, k).monic());
  }
}

// Invariant factors of a block with no unit entries, from its determinant
// divisors d_i = D_i / D_{i-1}.
void divisor_snf(const PolyMatrix& block, std::vector<TPoly>& diag) {
  const BiPolyMatrix pm = clear_denominators(block);
  const std::size_t s = std::min(block.rows(), block.cols());
  TPoly prev(1);
  for (std::size_t k = 1; k <= s; ++k) {
    const BiPoly g = minor_gcd(pm, k);
    if (g.is_zero()) break;
    const TPoly dk = TPoly::from_bipoly(g).monic();
    auto [q, rem] = divmod(dk, prev);
    if (!rem.is_zero()) throw std::logic_error("snf: determinant divisors do not divide");
    diag.push_back(q.monic());
    prev = dk;
  }
}

}  // namespace

SNFResult snf(PolyMatrix a) {
  const std::size_t R = a.rows(), C = a.cols();
  const std::size_t r = std::min(R, C);
  std::vector<TPoly> diag;
  diag.reserve(r);
  std::size_t k = 0;
  // Entries free of t are units of Q(mu)[t]: pivot on them first, sparsest
  // row and column first.
  for (; k < r; ++k) {
    std::vector<std::size_t> row_nz(R, 0), col_nz(C, 0);
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j)
        if (!a(i, j).is_zero()) {
          ++row_nz[i];
          ++col_nz[j];
        }
    bool found = false;
    std::pair<std::size_t, std::size_t> best{};
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j) {
        const TPoly& x = a(i, j);
        if (x.degree() != 0) continue;
        std::pair<std::size_t, std::size_t> key{(row_nz[i] - 1) * (col_nz[j] - 1), x.bit_size()};
        if (!found || key < best) {
          best = key;
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(a, k, pr);
    swap_cols(a, k, pc);
    const RatFunc inv = a(k, k).leading().inverse();
    for (std::size_t i = k + 1; i < R; ++i) {
      if (a(i, k).is_zero()) continue;
      const TPoly q = a(i, k) * TPoly(inv);
      row_axpy(a, i, k, q, k);
    }
    // Column k is now zero below the unit, so clearing row k only touches row k.
    for (std::size_t j = k + 1; j < C; ++j) a(k, j) = TPoly();
    diag.emplace_back(1);
  }
  if (k < r) {
    std::vector<std::size_t> rest_r, rest_c;
    for (std::size_t i = k; i < R; ++i) rest_r.push_back(i);
    for (std::size_t j = k; j < C; ++j) rest_c.push_back(j);
    const std::size_t s = std::min(rest_r.size(), rest_c.size());
    if (binomial(2 * s, s) <= static_cast<long double>(kDivisorBlockLimit))
      divisor_snf(a.select(rest_r, rest_c), diag);
    else
      euclidean_snf(a, k, diag);
  }
  SNFResult result;
  for (auto& d : diag) {
    result.primitive_factors.push_back(d.to_bipoly());
    result.invariant_factors.push_back(std::move(d));
  }
  while (result.invariant_factors.size() < r) {
    result.invariant_factors.emplace_back();
    result.primitive_factors.emplace_back();
  }
  return result;
}

TPoly determinant_divisor(const PolyMatrix& m, std::size_t k, const DeterminantDivisorOptions& options) {
  const std::size_t R = m.rows(), C = m.cols();
  if (k == 0 || k > std::min(R, C)) throw std::invalid_argument("determinant_divisor: k out of range");
  const long double pairs = binomial(R, k) * binomial(C, k);
  if (pairs > static_cast<long double>(options.minor_limit)) {
    if (!options.snf_fallback) throw std::runtime_error("determinant_divisor: minor limit exceeded");
    const SNFResult s = snf(m);
    TPoly product(1);
    for (std::size_t i = 0; i < k; ++i) product = product * s.invariant_factors[i];
    return product.monic();
  }
  // Row scaling by polynomials in mu multiplies every minor by a unit of Q(mu).
  return TPoly::from_bipoly(minor_gcd(clear_denominators(m), k)).monic();
}

}  // namespace degsim
