#include <gtest/gtest.h>

#include <random>

#include "degsim/bipoly.hpp"
#include "degsim/linalg.hpp"
#include "degsim/ratfunc.hpp"
#include "degsim/snf.hpp"
#include "oracles.hpp"

using namespace degsim;

namespace {

std::mt19937_64 rng(12345);

long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

UniPoly random_uni(int deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(Rational(small(-5, 5)));
  return UniPoly(c);
}

BiPoly random_bi(int dt, int dm) {
  std::vector<std::vector<Rational>> c(dt + 1, std::vector<Rational>(dm + 1));
  for (auto& row : c)
    for (auto& x : row) x = small(-3, 3);
  return BiPoly(c);
}

TPoly random_tpoly(int dt, bool with_mu) {
  std::vector<RatFunc> c;
  for (int i = 0; i <= dt; ++i) {
    if (with_mu && small(0, 2) == 0) c.emplace_back(UniPoly({Rational(small(-2, 2)), Rational(small(-2, 2))}));
    else c.emplace_back(small(-3, 3));
  }
  return TPoly(c);
}

PolyMatrix random_poly_matrix(std::size_t r, std::size_t c, bool with_mu) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small(0, 3) == 0 ? TPoly() : random_tpoly(small(0, 2), with_mu);
  return m;
}

TPoly monic_or_zero(const TPoly& p) { return p.is_zero() ? p : p.monic(); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(UniPoly, DivmodIdentity) {
  for (int k = 0; k < 100; ++k) {
    UniPoly a = random_uni(small(0, 6)), b = random_uni(small(0, 3));
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(UniPoly(1), UniPoly()), std::domain_error);
}

TEST(UniPoly, GcdDividesBothAndRecoversCommonFactor) {
  for (int k = 0; k < 50; ++k) {
    UniPoly c = random_uni(small(1, 3));
    if (c.degree() < 1) continue;
    UniPoly a = random_uni(3) * c, b = random_uni(2) * c;
    if (a.is_zero() || b.is_zero()) continue;
    UniPoly g = gcd(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    EXPECT_TRUE(divides(c.monic(), g));
  }
}

TEST(UniPoly, InterpolationReproduces) {
  UniPoly p = random_uni(5);
  std::vector<Rational> xs, ys;
  for (long x = -3; x <= 2; ++x) xs.push_back(x), ys.push_back(p.eval(x));
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(UniPoly, Printing) {
  UniPoly p({Rational(-1), Rational(0), Rational(1)});
  EXPECT_EQ(p.to_string(), "t^2 - 1");
}

TEST(BiPoly, ProductDividesExactly) {
  for (int k = 0; k < 40; ++k) {
    BiPoly a = random_bi(2, 2), b = random_bi(2, 1);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(divide_exact(BiPoly::t() + BiPoly(1), BiPoly::mu()).has_value());
}

TEST(BiPoly, GcdFindsCommonFactor) {
  const BiPoly t = BiPoly::t(), mu = BiPoly::mu();
  const BiPoly c = t * t + BiPoly(3) * mu * t + BiPoly(2) * mu * mu - BiPoly(1);
  for (int k = 0; k < 20; ++k) {
    BiPoly a = random_bi(1, 1), b = random_bi(2, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const BiPoly g = gcd(a * c, b * c);
    EXPECT_TRUE(divide_exact(g, c).has_value());
    EXPECT_TRUE(divide_exact(a * c, g).has_value());
  }
  EXPECT_THROW(gcd(BiPoly(), BiPoly()), std::domain_error);
}

TEST(BiPoly, EvalAgreesWithSpecialization) {
  BiPoly p = random_bi(3, 2);
  for (long m = -2; m <= 2; ++m)
    for (long t = -2; t <= 2; ++t) {
      EXPECT_EQ(p.eval(t, m), p.at_mu(m).eval(t));
      EXPECT_EQ(p.eval(t, m), p.at_t(t).eval(m));
      EXPECT_EQ(p.negate_t().eval(t, m), p.eval(-t, m));
    }
}

TEST(BiPoly, PrintingOrder) {
  const BiPoly t = BiPoly::t(), mu = BiPoly::mu();
  EXPECT_EQ((t * t + BiPoly(3) * mu * t + BiPoly(2) * mu * mu - BiPoly(1)).to_string(), "t^2 + 3*t*mu + 2*mu^2 - 1");
}

TEST(RatFunc, FieldOperations) {
  for (int k = 0; k < 30; ++k) {
    UniPoly n = random_uni(2), d = random_uni(2);
    if (n.is_zero() || d.is_zero()) continue;
    RatFunc f(n, d);
    EXPECT_EQ(f * f.inverse(), RatFunc(1));
    EXPECT_EQ(f - f, RatFunc(0));
    EXPECT_EQ((f + RatFunc(1)) - RatFunc(1), f);
    EXPECT_EQ(f.den().leading(), 1);
  }
}

TEST(Linalg, DeterminantsMatchCofactorExpansion) {
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = small(1, 6);
    IntMatrix m(n, n);
    RatMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = small(-4, 4);
        r(i, j) = make_rational(small(-4, 4), small(1, 3));
      }
    EXPECT_EQ(det_integer(m), oracle::laplace_det(m));
    EXPECT_EQ(det_rational(r), oracle::laplace_det(r));
  }
  EXPECT_THROW(det_integer(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Linalg, BivariateDeterminantMatchesCofactorExpansion) {
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = small(1, 4);
    BiPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_bi(small(0, 2), small(0, 1));
    EXPECT_EQ(det_bipoly(m), oracle::laplace_det(m));
  }
}

TEST(Linalg, CharPolyMatchesLeverrier) {
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = small(1, 6);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(small(-3, 3), small(1, 2));
    EXPECT_EQ(char_poly_rational(m), oracle::leverrier(m));
  }
}

TEST(Linalg, NullspaceAndInverse) {
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = small(1, 5), c = small(1, 6);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small(-2, 2);
    const auto basis = nullspace(m);
    EXPECT_EQ(basis.size() + rank(m), c);
    for (const auto& v : basis)
      for (std::size_t i = 0; i < r; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
    if (r == c) {
      auto inv = inverse(m);
      EXPECT_EQ(inv.has_value(), det_rational(m) != 0);
      if (inv) {
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) {
            Rational s = 0;
            for (std::size_t l = 0; l < r; ++l) s += m(i, l) * (*inv)(l, j);
            EXPECT_EQ(s, i == j ? 1 : 0);
          }
      }
    }
  }
}

TEST(Snf, KnownSmallForms) {
  // diag(t, t^2) is already in Smith form; diag(t^2, t) is not
  PolyMatrix m(2, 2);
  const TPoly t(std::vector<RatFunc>{RatFunc(0), RatFunc(1)});
  m(0, 0) = t * t;
  m(1, 1) = t;
  const auto s = snf(m);
  ASSERT_EQ(s.invariant_factors.size(), 2u);
  EXPECT_EQ(s.invariant_factors[0], t);
  EXPECT_EQ(s.invariant_factors[1], t * t);

  // diag(t, t+1) -> 1, t(t+1)
  PolyMatrix c(2, 2);
  c(0, 0) = t;
  c(1, 1) = t + TPoly(1);
  const auto sc = snf(c);
  EXPECT_EQ(sc.invariant_factors[0], TPoly(1));
  EXPECT_EQ(sc.invariant_factors[1], t * (t + TPoly(1)));

  // rank deficiency gives a zero factor
  PolyMatrix z(2, 2);
  z(0, 0) = t;
  z(0, 1) = t;
  z(1, 0) = t;
  z(1, 1) = t;
  const auto sz = snf(z);
  EXPECT_EQ(sz.invariant_factors[0], t);
  EXPECT_TRUE(sz.invariant_factors[1].is_zero());
}

TEST(Snf, RandomPropertySuite) {
  for (int k = 0; k < 80; ++k) {
    const std::size_t r = small(1, 3), c = small(1, 3);
    const PolyMatrix m = random_poly_matrix(r, c, k % 2 == 1);
    const auto s = snf(m);
    const auto& f = s.invariant_factors;
    ASSERT_EQ(f.size(), std::min(r, c));
    // divisibility chain, zeros last
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (f[i].is_zero()) {
        EXPECT_TRUE(f[i + 1].is_zero());
        continue;
      }
      EXPECT_TRUE(divmod(f[i + 1], f[i]).second.is_zero()) << i;
    }
    // D_k from minors = product of the first k factors
    TPoly prod(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      prod = prod * f[i];
      EXPECT_EQ(determinant_divisor(m, i + 1), monic_or_zero(prod)) << "k=" << i + 1;
    }
    if (r == c) EXPECT_EQ(monic_or_zero(oracle::laplace_det(m)), monic_or_zero(prod));
  }
}

TEST(Snf, UnimodularInvariance) {
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = small(2, 3);
    const PolyMatrix m = random_poly_matrix(n, n, false);
    PolyMatrix u = m;
    // row and column operations with polynomial multipliers
    for (int s = 0; s < 4; ++s) {
      const std::size_t i = small(0, n - 1), j = (i + 1 + small(0, n - 2)) % n;
      const TPoly q = random_tpoly(1, false);
      for (std::size_t col = 0; col < n; ++col) u(i, col) = u(i, col) + q * u(j, col);
      for (std::size_t row = 0; row < n; ++row) u(row, j) = u(row, j) - q * u(row, i);
    }
    EXPECT_EQ(snf(u).invariant_factors, snf(m).invariant_factors);
  }
}

TEST(Snf, DeterminantDivisorRange) {
  PolyMatrix m(2, 2);
  EXPECT_THROW(determinant_divisor(m, 0), std::invalid_argument);
  EXPECT_THROW(determinant_divisor(m, 3), std::invalid_argument);
}
