#pragma once

#include "drg/poly.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace drg {

// A real root of a squarefree integer polynomial.  Rational roots are held
// exactly; otherwise (lo, hi) isolates the root, with poly nonzero at both ends.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  explicit RealAlgebraic(const Rational& v) : exact_(true), lo_(v), hi_(v) {
    poly_ = IntPoly(std::vector<Integer>{-v.get_num(), v.get_den()});
  }
  RealAlgebraic(IntPoly squarefree, Rational lo, Rational hi)
      : poly_(squarefree.primitive()), exact_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval must have lo < hi");
  }

  bool is_rational() const { return exact_; }
  const Rational& rational_value() const {
    if (!exact_) throw std::logic_error("value is irrational");
    return lo_;
  }
  const IntPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  // halve the isolating interval
  RealAlgebraic bisected() const {
    if (exact_) return *this;
    Rational mid = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0) return RealAlgebraic(mid);
    RealAlgebraic r = *this;
    if (poly_.sign_at(lo_) != sm)
      r.hi_ = mid;
    else
      r.lo_ = mid;
    return r;
  }

  RealAlgebraic refined_to(const Rational& width) const {
    RealAlgebraic r = *this;
    while (!r.exact_ && r.width() > width) r = r.bisected();
    return r;
  }

  double to_double() const {
    if (exact_) return lo_.get_d();
    RealAlgebraic r = refined_to(pow2(-60));
    return r.exact_ ? r.lo_.get_d() : Rational((r.lo_ + r.hi_) / 2).get_d();
  }

 private:
  IntPoly poly_;
  bool exact_;
  Rational lo_, hi_;
};

namespace detail {

// Make the root exact if it is rational: a rational root of p has denominator dividing lc(p).
inline RealAlgebraic snap_rational(const RealAlgebraic& x) {
  if (x.is_rational()) return x;
  const Integer lc = abs(x.poly().leading());
  RealAlgebraic r = x.refined_to(make_rational(1, 4 * lc));
  if (r.is_rational()) return r;
  Rational cand = make_rational(round_of(r.lo() * lc), lc);
  if (cand > r.lo() && cand < r.hi() && x.poly().sign_at(cand) == 0) return RealAlgebraic(cand);
  return x;
}

inline int count_open(const SturmChain& s, const IntPoly& p, const Rational& lo, const Rational& hi) {
  return s.count_in(lo, hi) - (p.sign_at(hi) == 0 ? 1 : 0);
}

}  // namespace detail

// All real roots of a squarefree polynomial, ascending.
inline std::vector<RealAlgebraic> real_roots(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw std::domain_error("indeterminate");
  std::vector<RealAlgebraic> out;
  if (squarefree.degree() < 1) return out;
  const IntPoly p = squarefree.primitive();
  SturmChain s(p);
  Rational B = pow2(root_bound_log2(p));
  struct Work {
    Rational lo, hi;
    int count;
  };
  std::vector<Work> stack{{-B, B, s.count_in(-B, B)}};
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      out.push_back(detail::snap_rational(RealAlgebraic(p, w.lo, w.hi)));
      continue;
    }
    Rational mid = (w.lo + w.hi) / 2;
    if (p.sign_at(mid) != 0) {
      stack.push_back({w.lo, mid, s.count_in(w.lo, mid)});
      stack.push_back({mid, w.hi, s.count_in(mid, w.hi)});
      continue;
    }
    out.emplace_back(mid);
    // step away from the exact root until the neighbours are clean
    Rational eps = (w.hi - w.lo) / 4;
    while (p.sign_at(mid - eps) == 0 || p.sign_at(mid + eps) == 0 || s.count_in(mid - eps, mid + eps) != 1) eps /= 2;
    stack.push_back({w.lo, mid - eps, s.count_in(w.lo, mid - eps)});
    stack.push_back({mid + eps, w.hi, s.count_in(mid + eps, w.hi)});
  }
  std::sort(out.begin(), out.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) {
    Rational am = a.is_rational() ? a.rational_value() : (a.lo() + a.hi()) / 2;
    Rational bm = b.is_rational() ? b.rational_value() : (b.lo() + b.hi()) / 2;
    return am < bm;  // isolating intervals are disjoint
  });
  return out;
}

// sign of q at x, exact
inline int sign_at(const IntPoly& q, const RealAlgebraic& x) {
  if (x.is_rational()) return q.sign_at(x.rational_value());
  if (q.is_zero()) return 0;
  IntPoly g = gcd(q, x.poly());
  if (g.degree() >= 1) {
    SturmChain sg(g);
    if (detail::count_open(sg, g, x.lo(), x.hi()) > 0) return 0;
  }
  IntPoly qs = squarefree_part(q);
  if (qs.degree() < 1) return sgn(q.leading());
  SturmChain sq(qs);
  RealAlgebraic r = x;
  while (!r.is_rational() && detail::count_open(sq, qs, r.lo(), r.hi()) > 0) r = r.bisected();
  if (r.is_rational()) return q.sign_at(r.rational_value());
  return q.sign_at((r.lo() + r.hi()) / 2);
}

inline int compare(const RealAlgebraic& a, const Rational& b) {
  if (a.is_rational()) return sgn(a.rational_value() - b);
  if (b <= a.lo()) return 1;
  if (b >= a.hi()) return -1;
  // b inside the interval and not a root (rational roots are exact)
  int sb = a.poly().sign_at(b);
  if (sb == 0) {
    // b is some other root of poly?  cannot be: only one root inside
    throw std::logic_error("isolating interval invariant broken");
  }
  int slo = a.poly().sign_at(a.lo());
  return (sb == slo) ? 1 : -1;
}

inline int compare(const Rational& a, const RealAlgebraic& b) { return -compare(b, a); }

inline int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational()) return compare(a.rational_value(), b);
  if (b.is_rational()) return compare(a, b.rational_value());
  RealAlgebraic x = a;
  RealAlgebraic y = b;
  if (x.hi() <= y.lo()) return -1;
  if (y.hi() <= x.lo()) return 1;
  IntPoly g = gcd(x.poly(), y.poly());
  if (g.degree() >= 1) {
    Rational L = std::max(x.lo(), y.lo());
    Rational H = std::min(x.hi(), y.hi());
    SturmChain sg(g);
    if (detail::count_open(sg, g, L, H) > 0) return 0;
  }
  while (true) {
    if (x.is_rational()) return compare(x.rational_value(), y);
    if (y.is_rational()) return compare(x, y.rational_value());
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (x.width() >= y.width())
      x = x.bisected();
    else
      y = y.bisected();
  }
}

inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; }

// y = (a*x + b) / (c*x + d) with ad - bc != 0 and c*x + d != 0
inline RealAlgebraic mobius(const RealAlgebraic& x, const Integer& a, const Integer& b, const Integer& c,
                            const Integer& d) {
  if (a * d - b * c == 0) throw std::domain_error("degenerate Mobius map");
  if (x.is_rational()) {
    Rational den = c * x.rational_value() + d;
    if (den == 0) throw std::domain_error("Mobius map pole at the argument");
    return RealAlgebraic((a * x.rational_value() + b) / den);
  }
  // g(y) = (-c*y + a)^n f((d*y - b)/(-c*y + a))
  const IntPoly& f = x.poly();
  const int n = f.degree();
  IntPoly num(std::vector<Integer>{-b, d});
  IntPoly den(std::vector<Integer>{a, -c});
  std::vector<IntPoly> num_pow{IntPoly::constant(1)}, den_pow{IntPoly::constant(1)};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  IntPoly g;
  for (int i = 0; i <= n; ++i) g = g + num_pow[static_cast<size_t>(i)] * den_pow[static_cast<size_t>(n - i)] * f.coeff(i);
  RealAlgebraic r = x;
  // keep the pole -d/c out of the closed interval
  auto pole_inside = [&](const RealAlgebraic& v) {
    if (c == 0) return false;
    Rational pole = make_rational(-d, c);
    return pole >= v.lo() && pole <= v.hi();
  };
  while (!r.is_rational() && pole_inside(r)) r = r.bisected();
  if (r.is_rational()) return mobius(r, a, b, c, d);
  auto map = [&](const Rational& v) -> Rational { return (a * v + b) / (c * v + d); };
  Rational y1 = map(r.lo()), y2 = map(r.hi());
  if (y2 < y1) std::swap(y1, y2);
  return detail::snap_rational(RealAlgebraic(g, y1, y2));
}

// Exact display form: integer, rational, (a + b*sqrt(d))/c, or a narrow interval.
struct AlgebraicValue {
  enum class Kind { integer, rational, quadratic, interval };
  Kind kind = Kind::integer;
  Rational value;          // integer / rational
  Integer qa, qb, qd, qc;  // quadratic
  Rational lo, hi;         // interval

  std::string to_string() const {
    switch (kind) {
      case Kind::integer:
      case Kind::rational:
        return drg::to_string(value);
      case Kind::quadratic: {
        std::string s;
        bool paren = qc != 1;
        if (paren) s += "(";
        if (qa != 0) s += qa.get_str();
        Integer mb = abs(qb);
        if (qa != 0)
          s += qb < 0 ? " - " : " + ";
        else if (qb < 0)
          s += "-";
        if (mb != 1) s += mb.get_str() + "*";
        s += "sqrt(" + qd.get_str() + ")";
        if (paren) s += ")/" + qc.get_str();
        return s;
      }
      case Kind::interval:
        return "(" + drg::to_string(lo) + ", " + drg::to_string(hi) + "]";
    }
    return "?";
  }

  double to_double() const {
    switch (kind) {
      case Kind::integer:
      case Kind::rational:
        return value.get_d();
      case Kind::quadratic:
        return (qa.get_d() + qb.get_d() * std::sqrt(qd.get_d())) / qc.get_d();
      case Kind::interval:
        return Rational((lo + hi) / 2).get_d();
    }
    return 0;
  }
};

namespace detail {
// largest square s^2 dividing v (v > 0), returns {s, v/s^2}; trial division is fine at our sizes
inline std::pair<Integer, Integer> split_square(Integer v) {
  Integer s = 1;
  for (Integer p = 2; p * p <= v; ++p) {
    while (v % (p * p) == 0) {
      v /= p * p;
      s *= p;
    }
  }
  return {s, v};
}

inline AlgebraicValue quadratic_value(const IntPoly& q, const RealAlgebraic& x) {
  // roots of A x^2 + B x + C are (-B +- sqrt(B^2 - 4AC)) / 2A
  const Integer& A = q.coeffs()[2];
  const Integer& B = q.coeffs()[1];
  const Integer& C = q.coeffs()[0];
  Integer disc = B * B - 4 * A * C;
  auto [s, d] = split_square(disc);
  Integer a = -B, b = s, c = 2 * A;
  Rational centre = make_rational(-B, 2 * A);
  if (compare(x, centre) < 0) b = -b;
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  AlgebraicValue v;
  v.kind = AlgebraicValue::Kind::quadratic;
  v.qa = a / g;
  v.qb = b / g;
  v.qd = d;
  v.qc = c / g;
  return v;
}
}  // namespace detail

// Quadratic minimal polynomial of x if one exists (found via a real conjugate).
inline std::optional<IntPoly> quadratic_minimal_poly(const RealAlgebraic& x) {
  if (x.is_rational()) return std::nullopt;
  const IntPoly& f = x.poly();
  if (f.degree() == 2) return f;
  if (f.degree() < 2) return std::nullopt;
  const Integer lc = abs(f.leading());
  const Rational B = pow2(root_bound_log2(f));
  // a*(x+y) and a*x*y are integers for a quadratic factor with leading coefficient a | lc
  const Rational width = make_rational(1, 16 * lc) / (B + 1);
  RealAlgebraic xr = x.refined_to(width);
  if (xr.is_rational()) return std::nullopt;
  for (const auto& y0 : real_roots(f)) {
    if (compare(y0, xr) == 0) continue;
    RealAlgebraic y = y0.refined_to(width);
    Rational xm = (xr.lo() + xr.hi()) / 2;
    Rational ym = y.is_rational() ? y.rational_value() : (y.lo() + y.hi()) / 2;
    Integer S = round_of(lc * (xm + ym));
    Integer P = round_of(lc * xm * ym);
    IntPoly cand = IntPoly(std::vector<Integer>{P, -S, lc}).primitive();
    if (divides(cand, f) && sign_at(cand, x) == 0) return cand;
  }
  return std::nullopt;
}

inline AlgebraicValue describe(const RealAlgebraic& x) {
  AlgebraicValue v;
  if (x.is_rational()) {
    v.value = x.rational_value();
    v.kind = is_integer(v.value) ? AlgebraicValue::Kind::integer : AlgebraicValue::Kind::rational;
    return v;
  }
  if (auto q = quadratic_minimal_poly(x)) return detail::quadratic_value(*q, x);
  RealAlgebraic r = x.refined_to(pow2(-30));
  if (r.is_rational()) return describe(r);
  v.kind = AlgebraicValue::Kind::interval;
  v.lo = r.lo();
  v.hi = r.hi();
  return v;
}

// Irreducible factors over Q of a squarefree polynomial whose roots are all real.
// Subset search on root approximations; every factor is confirmed by exact division.
inline std::vector<IntPoly> factor_real_rooted(const IntPoly& squarefree) {
  IntPoly f = squarefree.primitive();
  if (f.degree() < 1) return {};
  if (f.degree() > 20) throw std::invalid_argument("factor_real_rooted: degree above 20");
  std::vector<RealAlgebraic> roots = real_roots(f);
  if (static_cast<int>(roots.size()) != f.degree()) throw std::invalid_argument("factor_real_rooted: non-real roots");
  const long bits = root_bound_log2(f) + 2;
  const Rational width = pow2(-(24 + f.degree() * bits + static_cast<long>(mpz_sizeinbase(f.leading().get_mpz_t(), 2))));
  std::vector<Rational> approx;
  for (auto& r : roots) {
    RealAlgebraic t = r.refined_to(width);
    approx.push_back(t.is_rational() ? t.rational_value() : (t.lo() + t.hi()) / 2);
  }
  std::vector<IntPoly> out;
  std::vector<int> remaining(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) remaining[i] = static_cast<int>(i);
  IntPoly rest = f;
  while (rest.degree() >= 1) {
    const Integer lc = abs(rest.leading());
    bool found = false;
    const int m = static_cast<int>(remaining.size());
    for (int size = 1; size <= m && !found; ++size) {
      // subsets of the given size that contain remaining[0]
      std::vector<int> pick(static_cast<size_t>(size));
      for (int i = 0; i < size; ++i) pick[static_cast<size_t>(i)] = i;
      while (true) {
        if (pick[0] != 0) break;
        std::vector<Rational> prod{Rational(1)};
        for (int idx : pick) {
          const Rational& r = approx[static_cast<size_t>(remaining[static_cast<size_t>(idx)])];
          std::vector<Rational> next(prod.size() + 1);
          for (size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] += prod[j];
            next[j] -= prod[j] * r;
          }
          prod = std::move(next);
        }
        std::vector<Integer> coeffs;
        for (const auto& c : prod) coeffs.push_back(round_of(c * lc));
        IntPoly cand = IntPoly(coeffs).primitive();
        if (cand.degree() == size && divides(cand, rest)) {
          out.push_back(cand);
          rest = exact_quotient(rest, cand);
          std::vector<int> keep;
          for (int i = 0; i < m; ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[static_cast<size_t>(i)]);
          remaining = keep;
          found = true;
          break;
        }
        // next combination
        int i = size - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
      }
    }
    if (!found) throw std::logic_error("factor_real_rooted: no factor found");
  }
  std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
  });
  return out;
}

}  // namespace drg
