#include "drg/spectral.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <random>

using namespace drg;

namespace {

RationalMatrix adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  RationalMatrix m(n);
  for (auto [a, b] : edges) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

RationalMatrix cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return adjacency(n, e);
}

RationalMatrix complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return adjacency(n, e);
}

RationalMatrix petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return adjacency(10, e);
}

IntPoly pow_poly(const IntPoly& p, int e) {
  IntPoly r = IntPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

IntPoly petersen_poly() {
  return IntPoly::linear_root(3) * pow_poly(IntPoly::linear_root(1), 5) * pow_poly(IntPoly::linear_root(-2), 4);
}

}  // namespace

TEST(IntPoly, ArithmeticAndPrinting) {
  IntPoly p{-1, 0, 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.str(), "x^2 - 1");
  EXPECT_EQ((IntPoly{1, 1} * IntPoly{-1, 1}), p);
  EXPECT_EQ(p.derivative(), (IntPoly{0, 2}));
  EXPECT_EQ(IntPoly{}.degree(), -1);
  EXPECT_EQ((IntPoly{6, 4, 2}).primitive(), (IntPoly{3, 2, 1}));
  EXPECT_EQ((IntPoly{6, 4, -2}).primitive(), (IntPoly{-3, -2, 1}));
  EXPECT_EQ(p.sign_at(Rational(1, 2)), -1);
  EXPECT_EQ(p.eval(Rational(3, 2)), Rational(5, 4));
}

TEST(IntPoly, GcdAndSquarefree) {
  IntPoly a = petersen_poly();
  IntPoly g = gcd(a, a.derivative());
  EXPECT_EQ(g, pow_poly(IntPoly::linear_root(1), 4) * pow_poly(IntPoly::linear_root(-2), 3));
  auto sf = squarefree_decomposition(a);
  ASSERT_EQ(sf.size(), 3u);
  EXPECT_EQ(sf[0].multiplicity, 1);
  EXPECT_EQ(sf[0].factor, IntPoly::linear_root(3));
  EXPECT_EQ(sf[1].multiplicity, 4);
  EXPECT_EQ(sf[1].factor, IntPoly::linear_root(-2));
  EXPECT_EQ(sf[2].multiplicity, 5);
  EXPECT_EQ(sf[2].factor, IntPoly::linear_root(1));
  EXPECT_EQ(squarefree_part(a), IntPoly::linear_root(3) * IntPoly::linear_root(-2) * IntPoly::linear_root(1));
}

TEST(CharPoly, TrivialCases) {
  RationalMatrix I{{1, 0}, {0, 1}};
  EXPECT_EQ(char_poly(I), pow_poly(IntPoly::linear_root(1), 2));
  EXPECT_EQ(char_poly(adjacency(2, {{0, 1}})), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(char_poly(RationalMatrix(1)), (IntPoly{0, 1}));
}

TEST(CharPoly, Petersen) { EXPECT_EQ(char_poly(petersen()), petersen_poly()); }

TEST(CharPoly, RationalEntriesScaleToPrimitive) {
  RationalMatrix m(2);
  m(0, 0) = Rational(1, 2);
  m(1, 1) = Rational(1, 3);
  // (x - 1/2)(x - 1/3) -> 6x^2 - 5x + 1
  EXPECT_EQ(char_poly(m), (IntPoly{1, -5, 6}));
  EXPECT_EQ(char_poly_monic(m), RatPoly(std::vector<Rational>{Rational(1, 6), Rational(-5, 6), Rational(1)}));
}

TEST(CharPoly, DeterminantAndTraceIdentities) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 7;
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational v = make_rational(val(rng), 1 + (trial % 3));
        m(i, j) = v;
        m(j, i) = v;
      }
    RatPoly p = char_poly_monic(m);
    Rational det0 = p.eval(0);
    Rational sign = (n % 2 == 0) ? 1 : -1;
    EXPECT_EQ(det0, sign * determinant(m));
    // sum of roots = trace
    EXPECT_EQ(-p.coeff(n - 1), m.trace());
  }
}

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots_greater(char_poly(cycle(6)), 1), 1);
  EXPECT_EQ(count_roots_greater(IntPoly::linear_root(3) * pow_poly(IntPoly::linear_root(-1), 3), 0), 1);
  EXPECT_EQ(count_roots_greater(char_poly(petersen()), -2), 6);
  EXPECT_EQ(count_roots_greater(char_poly(petersen()), Rational(-5, 2)), 10);
  EXPECT_THROW(count_roots_greater(IntPoly{}, 0), std::domain_error);
}

TEST(SecondLargest, Examples) {
  EXPECT_TRUE(second_largest_at_most(cycle(6), 1));
  RationalMatrix k22 = adjacency(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(second_largest_at_most(k22, 0));
  EXPECT_FALSE(second_largest_at_most(k22, -1));
  EXPECT_TRUE(second_largest_at_most(RationalMatrix(1), 0));
  EXPECT_TRUE(second_largest_at_most(RationalMatrix(1), 5));
}

TEST(IntegerEigenvalues, Examples) {
  auto ev = integer_eigenvalues(petersen_poly());
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_EQ(ev[0], std::make_pair(Integer(3), 1));
  EXPECT_EQ(ev[1], std::make_pair(Integer(1), 5));
  EXPECT_EQ(ev[2], std::make_pair(Integer(-2), 4));
  EXPECT_TRUE(integer_eigenvalues(IntPoly{-2, 0, 1}).empty());
  auto z = integer_eigenvalues(IntPoly{0, 0, 0, 1});
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], std::make_pair(Integer(0), 3));
  int total = 0;
  for (auto& [v, m] : ev) total += m;
  EXPECT_EQ(total, 10);
}

TEST(RealRoots, IsolationAndRationalSnap) {
  // (3x - 1)(x^2 - 2)(x + 4)
  IntPoly p = IntPoly{-1, 3} * IntPoly{-2, 0, 1} * IntPoly{4, 1};
  auto roots = real_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_TRUE(roots[0].is_rational());
  EXPECT_EQ(roots[0].rational_value(), -4);
  EXPECT_FALSE(roots[1].is_rational());
  EXPECT_NEAR(roots[1].to_double(), -1.41421356237, 1e-9);
  EXPECT_TRUE(roots[2].is_rational());
  EXPECT_EQ(roots[2].rational_value(), Rational(1, 3));
  EXPECT_NEAR(roots[3].to_double(), 1.41421356237, 1e-9);
  EXPECT_EQ(compare(roots[3], Rational(141, 100)), 1);
  EXPECT_EQ(compare(roots[3], Rational(142, 100)), -1);
}

TEST(RealAlgebraicCompare, EqualAcrossDifferentPolynomials) {
  auto a = real_roots(IntPoly{-2, 0, 1});          // +-sqrt2
  auto b = real_roots(IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1});  // +-sqrt2, +-sqrt3
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(compare(a[1], b[2]), 0);
  EXPECT_EQ(compare(a[1], b[3]), -1);
  EXPECT_EQ(compare(b[0], a[0]), -1);
  EXPECT_EQ(sign_at(IntPoly{-2, 0, 1}, b[2]), 0);
  EXPECT_EQ(sign_at(IntPoly{-3, 0, 1}, b[2]), -1);
  EXPECT_EQ(sign_at(IntPoly{-3, 0, 1}, b[3]), 0);
}

TEST(RealAlgebraicMobius, BoundTransform) {
  // y = -1 - b/(x+1) = (-x - 1 - b)/(x + 1) at x = sqrt2, b = 4
  auto x = real_roots(IntPoly{-2, 0, 1})[1];
  RealAlgebraic y = mobius(x, -1, -5, 1, 1);
  double expect = -1.0 - 4.0 / (std::sqrt(2.0) + 1.0);
  EXPECT_NEAR(y.to_double(), expect, 1e-12);
  RealAlgebraic r = mobius(RealAlgebraic(Rational(3)), -1, -17, 1, 1);
  EXPECT_EQ(r.rational_value(), -5);
}

TEST(Describe, SmallestEigenvalueForms) {
  EXPECT_EQ(smallest_eigenvalue(petersen()).to_string(), "-2");
  // Paley(13): x^2 + x - 3 factor
  RationalMatrix paley(13);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      int d = ((i - j) % 13 + 13) % 13;
      bool qr = false;
      for (int s = 1; s < 13; ++s)
        if (s * s % 13 == d) qr = true;
      if (i != j && qr) paley(i, j) = 1;
    }
  AlgebraicValue v = smallest_eigenvalue(paley);
  EXPECT_EQ(v.kind, AlgebraicValue::Kind::quadratic);
  EXPECT_EQ(v.to_string(), "(-1 - sqrt(13))/2");
  // x^3 - 3x + 1: roots irreducible cubic -> interval of width <= 2^-30
  AlgebraicValue c = describe(real_roots(IntPoly{1, -3, 0, 1})[0]);
  EXPECT_EQ(c.kind, AlgebraicValue::Kind::interval);
  EXPECT_LE(c.hi - c.lo, pow2(-30));
  EXPECT_NEAR(c.to_double(), -1.8793852415718, 1e-8);
  // quadratic found inside a reducible factor
  AlgebraicValue q = describe(real_roots(IntPoly{-5, 0, 1} * IntPoly{-7, 1})[0]);
  EXPECT_EQ(q.to_string(), "-sqrt(5)");
}

TEST(FactorRealRooted, SplitsIntoIrreducibles) {
  IntPoly p = IntPoly{-27, -10, 1} * IntPoly{-27, -10, 1} - IntPoly::monomial(2, 256);
  auto f = factor_real_rooted(p);
  ASSERT_EQ(f.size(), 4u);
  for (auto& g : f) EXPECT_EQ(g.degree(), 1);
  auto h = factor_real_rooted(IntPoly{-13, 0, 1} * IntPoly{1, 1} * IntPoly{-1, -1, 1});
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0], (IntPoly{1, 1}));
  EXPECT_EQ(h[1].degree(), 2);
}

// float oracle: test-only
TEST(CountRoots, AgreesWithDoubleEigensolver) {
  std::mt19937 rng(12345);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 11;
    RationalMatrix m(n);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    std::bernoulli_distribution coin(0.45);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) {
          m(i, j) = m(j, i) = 1;
          e(i, j) = e(j, i) = 1;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
    IntPoly p = char_poly(m);
    for (int num = -12; num <= 12; ++num) {
      double t = num / 4.0;
      bool near = false;
      int cnt = 0;
      for (int i = 0; i < n; ++i) {
        if (std::abs(es.eigenvalues()(i) - t) < 1e-6) near = true;
        if (es.eigenvalues()(i) > t) ++cnt;
      }
      if (near) continue;
      EXPECT_EQ(count_roots_greater(p, Rational(num, 4)), cnt);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}
