#pragma once

#include "drg/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// Dense integer polynomial, coefficients lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
  }
  explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

  static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
  // x - r
  static IntPoly linear_root(const Integer& r) { return IntPoly(std::vector<Integer>{-r, Integer(1)}); }
  static IntPoly monomial(int deg, const Integer& coef = 1) {
    std::vector<Integer> c(static_cast<size_t>(deg) + 1);
    c.back() = coef;
    return IntPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const { return (i < 0 || i > degree()) ? Integer(0) : c_[static_cast<size_t>(i)]; }
  const Integer& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational eval(const Rational& x) const {
    // homogenised Horner keeps everything in Z
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    if (c_.empty()) return 0;
    Integer acc = c_.back();
    Integer bp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      bp *= b;
      acc = acc * a + c_[static_cast<size_t>(i)] * bp;
    }
    return make_rational(acc, bp);
  }

  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  int sign_at_infinity(bool positive) const {
    if (c_.empty()) return 0;
    int s = sgn(c_.back());
    return (positive || degree() % 2 == 0) ? s : -s;
  }

  IntPoly derivative() const {
    std::vector<Integer> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(d));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // divided by content, leading coefficient made positive
  IntPoly primitive() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Integer> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
  }

  IntPoly operator-() const {
    std::vector<Integer> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const IntPoly& a, const Integer& s) {
    std::vector<Integer> r(a.c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // x^3 - 2*x + 1 style, highest degree first
  std::string str(char var = 'x') const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& v = c_[static_cast<size_t>(i)];
      if (v == 0) continue;
      Integer mag = abs(v);
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      bool unit = (mag == 1 && i > 0);
      if (!unit) out += mag.get_str();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

// lc(b)^(deg a - deg b + 1) * a = q*b + r
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int steps = 0;
  const int delta = a.degree() - db;
  int dr = a.degree();
  while (dr >= db && !r.empty()) {
    Integer lr = r[static_cast<size_t>(dr)];
    for (auto& v : r) v *= lb;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[static_cast<size_t>(i + shift)] -= lr * b.coeffs()[static_cast<size_t>(i)];
    ++steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  if (steps < delta + 1) {
    Integer f = pow_int(lb, static_cast<unsigned long>(delta + 1 - steps));
    for (auto& v : r) v *= f;
  }
  return IntPoly(std::move(r));
}

// primitive gcd with positive leading coefficient; gcd(0,0) = 0
inline IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0.primitive();
  IntPoly b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

// Rational-coefficient polynomial, used for exact division and the Yun loop.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  explicit RatPoly(const IntPoly& p) {
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
  }
  static RatPoly constant(const Rational& v) { return RatPoly(std::vector<Rational>{v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<size_t>(i)]; }
  const Rational& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RatPoly monic() const {
    if (c_.empty()) return {};
    std::vector<Rational> r(c_);
    Rational l = c_.back();
    for (auto& v : r) v /= l;
    return RatPoly(std::move(r));
  }

  RatPoly derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return RatPoly(std::move(d));
  }

  // scaled to a primitive integer polynomial with positive leading coefficient
  IntPoly to_primitive() const {
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> r;
    for (const auto& v : c_) r.push_back(v.get_num() * (l / v.get_den()));
    return IntPoly(std::move(r)).primitive();
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const RatPoly& a, const Rational& s) {
    std::vector<Rational> r(a.c_);
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
  }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // quotient and remainder
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<Rational> r(a.c_);
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    const Rational& lb = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
      Rational f = r[static_cast<size_t>(i)] / lb;
      if (f == 0) continue;
      const int shift = i - b.degree();
      q[static_cast<size_t>(shift)] = f;
      for (int j = 0; j <= b.degree(); ++j) r[static_cast<size_t>(j + shift)] -= f * b.c_[static_cast<size_t>(j)];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
  }

  friend RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
  friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline bool divides(const IntPoly& d, const IntPoly& p) {
  return (RatPoly(p) % RatPoly(d)).is_zero();
}

// p / d over Q, scaled to a primitive integer polynomial; throws unless d divides p
inline IntPoly exact_quotient(const IntPoly& p, const IntPoly& d) {
  auto [q, r] = RatPoly::divmod(RatPoly(p), RatPoly(d));
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q.to_primitive();
}

struct SquarefreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity;
};

namespace detail {
inline RatPoly monic_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return RatPoly(gcd(a.to_primitive(), b.to_primitive())).monic();
}
}  // namespace detail

// Yun: p = c * prod f_i^i with f_i squarefree and pairwise coprime
inline std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  RatPoly a = RatPoly(p).monic();
  RatPoly b = a.derivative();
  RatPoly c = detail::monic_gcd(a, b);
  RatPoly w = a / c;
  RatPoly y = b / c;
  RatPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    RatPoly g = detail::monic_gcd(w, z);
    if (g.degree() > 0) out.push_back({g.to_primitive(), i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  return out;
}

inline IntPoly squarefree_part(const IntPoly& p) {
  IntPoly r = IntPoly::constant(1);
  for (const auto& f : squarefree_decomposition(p)) r = r * f.factor;
  return r;
}

// Smallest e with every real root strictly inside (-2^e, 2^e).
inline long root_bound_log2(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeffs()[static_cast<size_t>(i)])));
  Integer bound = ceil_of(make_rational(m, abs(p.leading()))) + 1;
  return static_cast<long>(mpz_sizeinbase(bound.get_mpz_t(), 2));
}

// Sturm chain of a squarefree polynomial.  Negated primitive pseudo-remainders.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw std::domain_error("indeterminate");
    chain_.push_back(squarefree);
    if (squarefree.degree() < 1) return;
    chain_.push_back(squarefree.derivative());
    while (true) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      if (b.degree() < 1) break;
      IntPoly r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // pseudo-remainder carries lc(b)^(delta+1); undo its sign
      const int delta = a.degree() - b.degree();
      bool flip = (sgn(b.leading()) < 0) && ((delta + 1) % 2 == 1);
      IntPoly next = r.primitive();
      // primitive() forces a positive leading coefficient; restore the true sign of -r
      int true_sign = -sgn(r.leading()) * (flip ? -1 : 1);
      if (true_sign < 0) next = -next;
      chain_.push_back(std::move(next));
    }
  }

  const std::vector<IntPoly>& polys() const { return chain_; }

  int variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(p.sign_at(x));
    return count(s);
  }

  int variations_at_infinity(bool positive) const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(p.sign_at_infinity(positive));
    return count(s);
  }

  // distinct roots in (lo, hi]
  int count_in(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }
  int count_greater(const Rational& t) const { return variations_at(t) - variations_at_infinity(true); }
  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  static int count(const std::vector<int>& s) {
    int v = 0;
    int last = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (last != 0 && x != last) ++v;
      last = x;
    }
    return v;
  }

  std::vector<IntPoly> chain_;
};

}  // namespace drg
