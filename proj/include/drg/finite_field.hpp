#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

// q = p^e if q is a prime power
inline std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::pair<int, int>{q, 1};
  int e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) return std::nullopt;
  return std::pair<int, int>{p, e};
}

// GF(p^e).  Element = integer whose base-p digits are the coefficients in the
// polynomial basis 1, x, ..., x^{e-1}.  The modulus is the smallest monic
// irreducible of degree e in the same encoding (x^4 + x + 1 for q = 16).
class FiniteField {
 public:
  explicit FiniteField(int q) : q_(q) {
    auto pe = prime_power(q);
    if (!pe) throw std::invalid_argument("GF(" + std::to_string(q) + "): q must be a prime power");
    if (q > 4096) throw std::invalid_argument("GF(" + std::to_string(q) + "): field too large for table arithmetic");
    p_ = pe->first;
    e_ = pe->second;
    modulus_ = find_modulus();
    build_tables();
    generator_ = find_generator();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  // coefficient digits of the modulus, lowest first, length e+1
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return generator_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int pow(int a, long long n) const {
    int r = 1;
    for (long long i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::logic_error("no inverse");
  }
  bool is_square(int a) const { return a == 0 || squares_[static_cast<size_t>(a)]; }

  // multiplicative subgroup of index r: {g^{r j}}
  std::vector<int> subgroup_of_index(int r) const {
    if (r < 1 || (q_ - 1) % r != 0) throw std::invalid_argument("index must divide q - 1");
    std::vector<int> k;
    int step = pow(generator_, r), cur = 1;
    for (int j = 0; j < (q_ - 1) / r; ++j) {
      k.push_back(cur);
      cur = mul(cur, step);
    }
    return k;
  }

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * static_cast<size_t>(q_) + static_cast<size_t>(b); }

  std::vector<int> digits(int a, int len) const {
    std::vector<int> d(static_cast<size_t>(len), 0);
    for (int i = 0; i < len; ++i) {
      d[static_cast<size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  }
  int encode(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<size_t>(i)];
    return a;
  }

  // polynomial product reduced by `mod` (monic degree e)
  std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod) const {
    std::vector<int> r(static_cast<size_t>(2 * e_), 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j)
        r[static_cast<size_t>(i + j)] = (r[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p_;
    for (int d = 2 * e_ - 1; d >= e_; --d) {
      int c = r[static_cast<size_t>(d)];
      if (!c) continue;
      for (int i = 0; i <= e_; ++i) {
        size_t at = static_cast<size_t>(d - e_ + i);
        r[at] = ((r[at] - c * mod[static_cast<size_t>(i)]) % p_ + p_) % p_;
      }
    }
    r.resize(static_cast<size_t>(e_));
    return r;
  }

  // irreducible iff no root-free factorization: check no monic factor of degree <= e/2 divides it
  bool irreducible(const std::vector<int>& f) const {
    const int n = e_;
    for (int d = 1; 2 * d <= n; ++d) {
      int count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (int code = 0; code < count; ++code) {
        std::vector<int> g = digits(code, d);
        g.push_back(1);
        std::vector<int> r = f;
        for (int top = n; top >= d; --top) {
          int c = r[static_cast<size_t>(top)];
          if (!c) continue;
          for (int i = 0; i <= d; ++i) {
            size_t at = static_cast<size_t>(top - d + i);
            r[at] = ((r[at] - c * g[static_cast<size_t>(i)]) % p_ + p_) % p_;
          }
        }
        bool zero = true;
        for (int i = 0; i < d; ++i)
          if (r[static_cast<size_t>(i)]) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  std::vector<int> find_modulus() const {
    if (e_ == 1) return {0, 1};
    int count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    for (int code = 0; code < count; ++code) {
      std::vector<int> f = digits(code, e_);
      f.push_back(1);
      if (irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    const size_t Q = static_cast<size_t>(q_);
    add_.assign(Q * Q, 0);
    mul_.assign(Q * Q, 0);
    neg_.assign(Q, 0);
    squares_.assign(Q, false);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a, e_);
      std::vector<int> dn(da.size());
      for (size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[static_cast<size_t>(a)] = encode(dn);
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b, e_);
        std::vector<int> s(da.size());
        for (size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
        add_[idx(a, b)] = encode(s);
        if (e_ == 1)
          mul_[idx(a, b)] = (a * b) % p_;
        else
          mul_[idx(a, b)] = encode(mulmod(da, db, modulus_));
      }
    }
    for (int a = 1; a < q_; ++a) squares_[static_cast<size_t>(mul(a, a))] = true;
  }

  int find_generator() const {
    for (int g = 1; g < q_; ++g) {
      int cur = g, ord = 1;
      while (cur != 1) {
        cur = mul(cur, g);
        ++ord;
      }
      if (ord == q_ - 1) return g;
    }
    throw std::logic_error("no generator");
  }

  int q_, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
  std::vector<bool> squares_;
  int generator_ = 1;
};

}  // namespace drg
