#pragma once

#include "drg/algebraic.hpp"
#include "drg/matrix.hpp"

#include <utility>
#include <vector>

namespace drg {

// exact monic det(xI - M) over Q
inline RatPoly char_poly_monic(const RationalMatrix& M) { return RatPoly(char_poly(M)).monic(); }

struct Eigenvalue {
  RealAlgebraic value;
  int multiplicity;
};

// Distinct real roots with multiplicities, descending.
inline std::vector<Eigenvalue> real_spectrum(const IntPoly& p) {
  std::vector<Eigenvalue> out;
  for (const auto& f : squarefree_decomposition(p))
    for (auto& r : real_roots(f.factor)) out.push_back({std::move(r), f.multiplicity});
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return compare(a.value, b.value) > 0; });
  return out;
}

inline std::vector<Eigenvalue> spectrum_of(const RationalMatrix& M) { return real_spectrum(char_poly(M)); }

// roots strictly above t, with multiplicity
inline int count_roots_greater(const IntPoly& p, const Rational& t) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  int total = 0;
  for (const auto& f : squarefree_decomposition(p)) total += f.multiplicity * SturmChain(f.factor).count_greater(t);
  return total;
}

inline int count_roots_greater(const IntPoly& p, const RealAlgebraic& t) {
  if (t.is_rational()) return count_roots_greater(p, t.rational_value());
  if (p.is_zero()) throw std::domain_error("indeterminate");
  int total = 0;
  for (const auto& f : squarefree_decomposition(p))
    for (const auto& r : real_roots(f.factor))
      if (compare(r, t) > 0) total += f.multiplicity;
  return total;
}

// roots at or above t, with multiplicity
inline int count_roots_at_least(const IntPoly& p, const RealAlgebraic& t) {
  if (p.is_zero()) throw std::domain_error("indeterminate");
  int total = 0;
  for (const auto& f : squarefree_decomposition(p))
    for (const auto& r : real_roots(f.factor))
      if (compare(r, t) >= 0) total += f.multiplicity;
  return total;
}

inline bool second_largest_at_most(const RationalMatrix& M, const Rational& t) {
  return count_roots_greater(char_poly(M), t) <= 1;
}

// integer roots with multiplicity, descending; each root divides the trailing nonzero coefficient
inline std::vector<std::pair<Integer, int>> integer_eigenvalues(const IntPoly& p) {
  std::vector<std::pair<Integer, int>> out;
  if (p.is_zero()) throw std::domain_error("indeterminate");
  for (const auto& f : squarefree_decomposition(p)) {
    Integer trailing = 0;
    for (const auto& c : f.factor.coeffs())
      if (c != 0) {
        trailing = c;
        break;
      }
    for (const auto& r : real_roots(f.factor)) {
      if (!r.is_rational() || !is_integer(r.rational_value())) continue;
      const Integer v = r.rational_value().get_num();
      if (v != 0 && trailing % v != 0) throw std::logic_error("integer root does not divide trailing coefficient");
      out.emplace_back(v, f.multiplicity);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

inline int multiplicity_of(const IntPoly& p, const Rational& v) {
  for (const auto& f : squarefree_decomposition(p))
    if (f.factor.sign_at(v) == 0) return f.multiplicity;
  return 0;
}

inline RealAlgebraic smallest_root(const IntPoly& p) {
  std::vector<Eigenvalue> s = real_spectrum(p);
  if (s.empty()) throw std::domain_error("no real roots");
  return s.back().value;
}

inline AlgebraicValue smallest_eigenvalue(const RationalMatrix& M) { return describe(smallest_root(char_poly(M))); }

}  // namespace drg
