#pragma once

#include "drg/poly.hpp"

#include <string>
#include <vector>

namespace drg {

// Dense square matrix of exact rationals.  Quotient matrices are generally
// not symmetric, so symmetry is a query rather than an invariant.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) : RationalMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix must be square");
      int j = 0;
      for (long v : r) (*this)(i, j++) = v;
      ++i;
    }
  }

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Rational trace() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  RationalMatrix principal_submatrix(const std::vector<int>& keep) const {
    RationalMatrix m(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(keep[i], keep[j]);
    return m;
  }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j); }

  int n_ = 0;
  std::vector<Rational> a_;
};

// Berkowitz, division-free.  For M = N/d with N integral this returns
// d^n det(xI - M), made primitive; for integer M it is exactly det(xI - M).
inline IntPoly char_poly(const RationalMatrix& M) {
  const int n = M.size();
  if (n == 0) return IntPoly::constant(1);
  Integer d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), M(i, j).get_den_mpz_t());
  // sparse integer rows of N
  std::vector<std::vector<std::pair<int, Integer>>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (M(i, j) != 0) rows[static_cast<size_t>(i)].emplace_back(j, M(i, j).get_num() * (d / M(i, j).get_den()));
  auto entry = [&](int i, int j) -> Integer {
    for (const auto& [c, v] : rows[static_cast<size_t>(i)])
      if (c == j) return v;
    return 0;
  };

  // p holds coefficients highest degree first
  std::vector<Integer> p{Integer(1), -entry(0, 0)};
  for (int r = 1; r < n; ++r) {
    // leading block N = first r rows/cols, C = column r above, R = row r left, a = N[r][r]
    std::vector<Integer> col(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) col[static_cast<size_t>(i)] = entry(i, r);
    std::vector<Integer> t(static_cast<size_t>(r) + 2);
    t[0] = 1;
    t[1] = -entry(r, r);
    std::vector<Integer> v = col;
    std::vector<Integer> next(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
      // t[k+2] = -R N^k C
      Integer s = 0;
      for (const auto& [c, val] : rows[static_cast<size_t>(r)])
        if (c < r) s += val * v[static_cast<size_t>(c)];
      t[static_cast<size_t>(k) + 2] = -s;
      if (k + 1 < r) {
        for (int i = 0; i < r; ++i) {
          Integer acc = 0;
          for (const auto& [c, val] : rows[static_cast<size_t>(i)])
            if (c < r) acc += val * v[static_cast<size_t>(c)];
          next[static_cast<size_t>(i)] = acc;
        }
        std::swap(v, next);
      }
    }
    // new p = T p with T lower-triangular Toeplitz, first column t
    std::vector<Integer> q(static_cast<size_t>(r) + 2);
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < p.size() && j <= i; ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  // P_N(y) with y = d x: coefficient of x^i is p_i * d^i
  std::vector<Integer> lowfirst(static_cast<size_t>(n) + 1);
  Integer dp = 1;
  for (int i = 0; i <= n; ++i) {
    lowfirst[static_cast<size_t>(i)] = p[static_cast<size_t>(n - i)] * dp;
    dp *= d;
  }
  IntPoly res(std::move(lowfirst));
  return d == 1 ? res : res.primitive();
}

// Fraction-free (Bareiss) determinant; used to cross-check char_poly at 0.
inline Rational determinant(const RationalMatrix& M) {
  const int n = M.size();
  if (n == 0) return 1;
  Integer d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), M(i, j).get_den_mpz_t());
  std::vector<std::vector<Integer>> a(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = M(i, j).get_num() * (d / M(i, j).get_den());
  int sgn_ = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    auto K = static_cast<size_t>(k);
    if (a[K][K] == 0) {
      size_t piv = K + 1;
      while (piv < static_cast<size_t>(n) && a[piv][K] == 0) ++piv;
      if (piv == static_cast<size_t>(n)) return 0;
      std::swap(a[K], a[piv]);
      sgn_ = -sgn_;
    }
    for (size_t i = K + 1; i < static_cast<size_t>(n); ++i)
      for (size_t j = K + 1; j < static_cast<size_t>(n); ++j) {
        a[i][j] = a[i][j] * a[K][K] - a[i][K] * a[K][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[K][K];
  }
  Rational det = make_rational(a.back().back() * sgn_, pow_int(d, static_cast<unsigned long>(n)));
  return det;
}

}  // namespace drg
