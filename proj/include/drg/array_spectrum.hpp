#pragma once

#include "drg/intersection_array.hpp"
#include "drg/spectral.hpp"

#include <optional>
#include <vector>

namespace drg {

class InfeasibleArray : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ArrayEigenvalue {
  RealAlgebraic value;
  IntPoly minimal_poly;
  AlgebraicValue display;
  std::optional<Rational> multiplicity;  // nullopt when irrational
  double multiplicity_approx = 0;
};

struct SpectrumEstimate {
  std::vector<ArrayEigenvalue> eigenvalues;  // theta_0 > theta_1 > ... > theta_D

  bool multiplicities_positive_integers() const {
    for (const auto& e : eigenvalues)
      if (!e.multiplicity || !is_integer(*e.multiplicity) || *e.multiplicity <= 0) return false;
    return true;
  }
  bool eigenvalues_integral() const {
    for (const auto& e : eigenvalues)
      if (!e.value.is_rational() || !is_integer(e.value.rational_value())) return false;
    return true;
  }
};

// sum_i k_i u_i(x)^2 with the standard sequence u_0 = 1, u_1 = x/k
inline RatPoly standard_sequence_norm(const IntersectionArray& arr, const DRGParams& p) {
  const int D = arr.diameter();
  RatPoly x(std::vector<Rational>{Rational(0), Rational(1)});
  std::vector<RatPoly> u{RatPoly::constant(1)};
  if (D >= 1) u.push_back(x * make_rational(1, big(arr.k())));
  for (int i = 1; i < D; ++i) {
    // b_i u_{i+1} = (x - a_i) u_i - c_i u_{i-1}
    RatPoly t = (x - RatPoly::constant(ratio(arr.a_at(i)))) * u[static_cast<size_t>(i)] -
                u[static_cast<size_t>(i - 1)] * ratio(arr.c_at(i));
    u.push_back(t * make_rational(1, big(arr.b_at(i))));
  }
  RatPoly s;
  for (int i = 0; i <= D; ++i) s = s + u[static_cast<size_t>(i)] * u[static_cast<size_t>(i)] * p.ki[static_cast<size_t>(i)];
  return s;
}

inline SpectrumEstimate spectrum(const IntersectionArray& arr) {
  DRGParams p = derive(arr);
  if (!p.ki_integral || !p.ki_positive) throw InfeasibleArray("infeasible array " + arr.str() + ": k_i not positive integers");
  for (int i = 0; i < arr.diameter(); ++i)
    if (arr.b_at(i) <= 0 || arr.c_at(i + 1) <= 0) throw InfeasibleArray("infeasible array " + arr.str());
  IntPoly L = char_poly(tridiagonal_matrix(arr));
  std::vector<IntPoly> factors = factor_real_rooted(L);
  RatPoly S = standard_sequence_norm(arr, p);
  SpectrumEstimate est;
  for (const auto& f : factors) {
    RatPoly rem = S % RatPoly(f);
    std::optional<Rational> m;
    if (rem.degree() <= 0) m = p.nu / rem.coeff(0);
    for (auto& r : real_roots(f)) {
      ArrayEigenvalue e{r, f, describe(r), m, 0};
      double sv = 0;
      double xv = r.to_double();
      for (int i = static_cast<int>(S.coeffs().size()) - 1; i >= 0; --i) sv = sv * xv + S.coeffs()[static_cast<size_t>(i)].get_d();
      e.multiplicity_approx = p.nu.get_d() / sv;
      est.eigenvalues.push_back(std::move(e));
    }
  }
  std::sort(est.eigenvalues.begin(), est.eigenvalues.end(),
            [](const ArrayEigenvalue& a, const ArrayEigenvalue& b) { return compare(a.value, b.value) > 0; });
  return est;
}

}  // namespace drg
