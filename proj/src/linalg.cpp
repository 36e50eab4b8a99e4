#include "degsim/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace degsim {

Integer det_integer(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("det_integer: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return Integer(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    mpz_srcptr pivot = m(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_srcptr lead = m(i, k).get_mpz_t();
      const bool lead_zero = mpz_sgn(lead) == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_ptr x = m(i, j).get_mpz_t();
        mpz_mul(tmp.get_mpz_t(), x, pivot);
        if (!lead_zero) mpz_submul(tmp.get_mpz_t(), lead, m(k, j).get_mpz_t());
        mpz_divexact(x, tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

namespace {

// Scales each row to integers; returns the product of the row scales.
Integer clear_row_denominators(const RatMatrix& m, IntMatrix& out) {
  out = IntMatrix(m.rows(), m.cols());
  Integer total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (lcm == 1) {
        out(r, c) = m(r, c).get_num();
      } else {
        out(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
      }
    }
    total *= lcm;
  }
  return total;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < m.cols(); ++j)
      if (m(row, j) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j : nz) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational det_rational(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_rational: matrix is not square");
  IntMatrix im;
  const Integer scale = clear_row_denominators(m, im);
  Rational d(det_integer(std::move(im)), scale);
  d.canonicalize();
  return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
      if (x == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    for (auto& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  return basis;
}

UniPoly char_poly_rational(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly_rational: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational x(static_cast<long>(k));
    RatMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = (i == j ? x : Rational(0)) - m(i, j);
    xs.push_back(x);
    ys.push_back(det_rational(e));
  }
  return interpolate(xs, ys);
}

std::pair<int, int> det_degree_bounds(const BiPolyMatrix& m) {
  int dt = 0, dm = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int rt = 0, rm = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rt = std::max(rt, m(i, j).deg_t());
      rm = std::max(rm, m(i, j).deg_mu());
    }
    dt += rt;
    dm += rm;
  }
  return {dt, dm};
}

namespace {

Rational det_at(const BiPolyMatrix& m, const Rational& t, const Rational& mu) {
  RatMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).eval(t, mu);
  return det_rational(e);
}

}  // namespace

BiPoly det_bipoly(const BiPolyMatrix& m, int deg_t_bound, int deg_mu_bound) {
  if (!m.square()) throw std::invalid_argument("det_bipoly: matrix is not square");
  if (deg_t_bound < 0 || deg_mu_bound < 0) throw std::invalid_argument("det_bipoly: negative degree bound");
  const auto nt = static_cast<std::size_t>(deg_t_bound) + 1;
  const auto nm = static_cast<std::size_t>(deg_mu_bound) + 1;
  std::vector<Rational> tx(nt), mx(nm);
  for (std::size_t i = 0; i < nt; ++i) tx[i] = static_cast<long>(i);
  for (std::size_t j = 0; j < nm; ++j) mx[j] = static_cast<long>(j);

  // For each mu node, the determinant as a polynomial in t.
  std::vector<UniPoly> by_mu;
  by_mu.reserve(nm);
  std::vector<Rational> vals(nt);
  for (std::size_t j = 0; j < nm; ++j) {
    for (std::size_t i = 0; i < nt; ++i) vals[i] = det_at(m, tx[i], mx[j]);
    by_mu.push_back(interpolate(tx, vals));
  }
  std::vector<UniPoly> rows(nt);
  std::vector<Rational> cvals(nm);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nm; ++j) cvals[j] = by_mu[j].coeff(i);
    rows[i] = interpolate(mx, cvals);
  }
  BiPoly result(std::move(rows));

  const Rational t_check(static_cast<long>(nt) + 1);
  const Rational mu_check(-static_cast<long>(nm) - 2);
  if (result.eval(t_check, mu_check) != det_at(m, t_check, mu_check)) {
    throw std::runtime_error("det_bipoly: degree bound exceeded");
  }
  return result;
}

BiPoly det_bipoly(const BiPolyMatrix& m) {
  auto [dt, dm] = det_degree_bounds(m);
  return det_bipoly(m, dt, dm);
}

}  // namespace degsim
