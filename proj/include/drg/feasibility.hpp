#pragma once

#include "drg/array_spectrum.hpp"
#include "drg/imported_facts.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace drg {

enum class Verdict { pass, fail, inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inapplicable:
      return "inapplicable";
  }
  return "?";
}

struct FilterResult {
  std::string id;  // F1..F7
  std::string name;
  Verdict verdict = Verdict::inapplicable;
  std::string witness;
};

struct Assumptions {
  bool contains_quadrangle = false;
};

// ---- shapes ---------------------------------------------------------------

struct ShapeTags {
  bool taylor = false;
  bool conference = false;
  bool bipartite = false;
  bool complete_multipartite = false;
  // antipodal r-cover of K_{q+1}, r >= 3: {q, q-m-1, 1; 1, m, q}
  std::optional<std::array<long long, 3>> antipodal_cover;  // q, m, r

  std::vector<std::string> names() const {
    std::vector<std::string> v;
    if (taylor) v.push_back("taylor");
    if (antipodal_cover)
      v.push_back("antipodal-cover-of-complete(q=" + std::to_string((*antipodal_cover)[0]) +
                  ", m=" + std::to_string((*antipodal_cover)[1]) + ", r=" + std::to_string((*antipodal_cover)[2]) + ")");
    if (conference) v.push_back("conference");
    if (bipartite) v.push_back("bipartite");
    if (complete_multipartite) v.push_back("complete-multipartite");
    return v;
  }
};

inline bool is_conference_form(const IntersectionArray& a) {
  return a.diameter() == 2 && a.c[0] == 1 && a.b[1] == a.c[1] && a.b[0] == 2 * a.b[1] && a.b[1] >= 1;
}

// antipodal cover of a complete graph with diameter 3: {k, (r-1)c2, 1; 1, c2, k}
inline bool is_complete_cover_form(const IntersectionArray& a) {
  return a.diameter() == 3 && a.c[0] == 1 && a.b[2] == 1 && a.c[2] == a.b[0] && a.c[1] > 0 && a.b[1] % a.c[1] == 0;
}

inline ShapeTags classify_shape(const IntersectionArray& a) {
  ShapeTags t;
  const int D = a.diameter();
  if (is_complete_cover_form(a)) {
    long long r = a.b[1] / a.c[1] + 1;
    if (r == 2)
      t.taylor = true;
    else if (r >= 3)
      t.antipodal_cover = std::array<long long, 3>{a.b[0], a.c[1], r};
  }
  t.conference = is_conference_form(a);
  if (D >= 1) {
    bool bip = true;
    for (int i = 1; i <= D; ++i)
      if (a.a_at(i) != 0) bip = false;
    t.bipartite = bip;
  }
  t.complete_multipartite = D == 2 && a.c[1] == a.b[0];
  return t;
}

// ---- strongly regular parameters -------------------------------------------

struct SRGParams {
  Integer nu, k, lambda, mu;
  Integer b1() const { return k - lambda - 1; }
  std::string str() const {
    return "(" + nu.get_str() + "," + k.get_str() + "," + lambda.get_str() + "," + mu.get_str() + ")";
  }
};

class InconsistentParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// mu = k + t1 t2, b1 = -(t1+1)(t2+1), lambda = k - b1 - 1, nu from k b1 = (nu-k-1) mu
inline SRGParams srg_from_eigs(long long k, long long theta1, long long theta2) {
  if (!(k > theta1 && theta1 > theta2)) throw InconsistentParameters("need k > theta1 > theta2");
  Integer K = big(k), t1 = big(theta1), t2 = big(theta2);
  Integer mu = K + t1 * t2;
  Integer b1 = -(t1 + 1) * (t2 + 1);
  Integer lambda = K - b1 - 1;
  if (mu <= 0) throw InconsistentParameters("mu = k + theta1*theta2 = " + mu.get_str() + " is not positive");
  if (b1 < 0) throw InconsistentParameters("b1 = -(theta1+1)(theta2+1) = " + b1.get_str() + " is negative");
  if (lambda < 0) throw InconsistentParameters("lambda = k - b1 - 1 = " + lambda.get_str() + " is negative");
  if ((K * b1) % mu != 0)
    throw InconsistentParameters("k*b1 = (nu-k-1)*mu has no integral nu: k*b1 = " + Integer(K * b1).get_str() +
                                 ", mu = " + mu.get_str());
  Integer nu = K + 1 + K * b1 / mu;
  return SRGParams{nu, K, lambda, mu};
}

inline SRGParams srg_params(const IntersectionArray& a) {
  if (a.diameter() != 2) throw std::invalid_argument("not a diameter-2 array: " + a.str());
  DRGParams p = derive(a);
  if (!is_integer(p.nu)) throw InfeasibleArray("non-integral vertex count for " + a.str());
  return SRGParams{p.nu.get_num(), big(a.k()), big(a.a_at(1)), big(a.c[1])};
}

// theta1 <= (nu - gamma)(k - mu)/(gamma k) for a coclique of size gamma
inline Rational coclique_ratio_bound(const SRGParams& p, long long gamma) {
  if (gamma < 1) throw std::invalid_argument("coclique size must be positive");
  Integer g = big(gamma);
  return make_rational((p.nu - g) * (p.k - p.mu), g * p.k);
}

// ---- the filter battery ----------------------------------------------------

struct FeasibilityReport {
  IntersectionArray array;
  Assumptions assumptions;
  std::vector<FilterResult> filters;
  ShapeTags shape;
  std::optional<SpectrumEstimate> spectrum;
  std::optional<ImportedFact> literature;  // separate from the arithmetic verdict

  bool surviving() const {
    for (const auto& f : filters)
      if (f.verdict == Verdict::fail) return false;
    return true;
  }
  std::string verdict() const { return surviving() ? "surviving (arithmetic)" : "infeasible"; }

  const FilterResult& filter(const std::string& id) const {
    for (const auto& f : filters)
      if (f.id == id) return f;
    throw std::out_of_range("no filter " + id);
  }

  // reporting priority when several filters fail
  std::optional<FilterResult> primary_failure() const {
    for (const char* id : {"F1", "F2", "F7", "F3", "F6", "F4", "F5"})
      for (const auto& f : filters)
        if (f.id == id && f.verdict == Verdict::fail) return f;
    return std::nullopt;
  }

  std::vector<std::string> failing_ids() const {
    std::vector<std::string> v;
    for (const auto& f : filters)
      if (f.verdict == Verdict::fail) v.push_back(f.id);
    return v;
  }
};

namespace detail {

inline std::string ll(long long v) { return std::to_string(v); }

inline FilterResult monotonicity(const IntersectionArray& a) {
  FilterResult r{"F1", "intersection-number monotonicity", Verdict::pass, ""};
  const int D = a.diameter();
  auto fail = [&](const std::string& w) {
    if (r.verdict == Verdict::pass) {
      r.verdict = Verdict::fail;
      r.witness = w;
    }
  };
  if (D == 0) {
    r.witness = "empty array (single vertex)";
    return r;
  }
  if (a.k() < 1) fail("b0 = " + ll(a.k()) + " < 1");
  if (a.c[0] != 1) fail("c1 = " + ll(a.c[0]) + " != 1");
  for (int i = 1; i < D; ++i) {
    if (i == 1 && !(a.b[0] > a.b[1])) fail("b0 = " + ll(a.b[0]) + " <= b1 = " + ll(a.b[1]) + " violates b0 > b1");
    if (i >= 2 && a.b[static_cast<size_t>(i - 1)] < a.b[static_cast<size_t>(i)])
      fail("b" + ll(i - 1) + " = " + ll(a.b[static_cast<size_t>(i - 1)]) + " < b" + ll(i) + " = " +
           ll(a.b[static_cast<size_t>(i)]));
  }
  for (int i = 0; i < D; ++i)
    if (a.b[static_cast<size_t>(i)] < 1) fail("b" + ll(i) + " = " + ll(a.b[static_cast<size_t>(i)]) + " < 1");
  for (int i = 2; i <= D; ++i)
    if (a.c_at(i - 1) > a.c_at(i))
      fail("c" + ll(i - 1) + " = " + ll(a.c_at(i - 1)) + " > c" + ll(i) + " = " + ll(a.c_at(i)));
  if (a.c_at(D) > a.k()) fail("c" + ll(D) + " = " + ll(a.c_at(D)) + " > k = " + ll(a.k()));
  for (int i = 1; i <= D; ++i)
    for (int j = 1; i + j <= D; ++j)
      if (a.b_at(i) < a.c_at(j))
        fail("b" + ll(i) + " = " + ll(a.b_at(i)) + " < c" + ll(j) + " = " + ll(a.c_at(j)) + " with i+j <= D");
  for (int i = 1; i <= D; ++i)
    if (a.a_at(i) < 0) fail("a" + ll(i) + " = k - b" + ll(i) + " - c" + ll(i) + " = " + ll(a.a_at(i)) + " < 0");
  if (r.verdict == Verdict::pass) r.witness = "all monotonicity and a_i >= 0 conditions hold";
  return r;
}

inline FilterResult valency_integrality(const IntersectionArray& a, const DRGParams& p) {
  FilterResult r{"F2", "k_i positive integers", Verdict::pass, ""};
  std::string ks;
  for (int i = 0; i <= p.D; ++i) ks += (i ? ", " : "") + to_string(p.ki[static_cast<size_t>(i)]);
  ks = "k_i = (" + ks + ")";
  for (int i = 1; i <= p.D; ++i) {
    const Rational& x = p.ki[static_cast<size_t>(i)];
    if (!is_integer(x) || x <= 0) {
      r.verdict = Verdict::fail;
      r.witness = "k" + ll(i) + " = " + to_string(x) + " is not a positive integer; " + ks;
      return r;
    }
  }
  (void)a;
  r.witness = ks + ", nu = " + to_string(p.nu);
  return r;
}

inline std::string spectrum_text(const SpectrumEstimate& s) {
  std::string t;
  for (const auto& e : s.eigenvalues) {
    if (!t.empty()) t += ", ";
    t += e.display.to_string() + "^";
    t += e.multiplicity ? to_string(*e.multiplicity) : ("~" + std::to_string(e.multiplicity_approx));
  }
  return t;
}

}  // namespace detail

inline FeasibilityReport feasibility(const IntersectionArray& a, Assumptions assume = {}) {
  FeasibilityReport rep;
  rep.array = a;
  rep.assumptions = assume;
  rep.shape = classify_shape(a);
  rep.literature = imported_fact_for(a);
  const int D = a.diameter();
  DRGParams p = derive(a);

  FilterResult f1 = detail::monotonicity(a);
  FilterResult f2 = detail::valency_integrality(a, p);
  rep.filters.push_back(f1);
  rep.filters.push_back(f2);

  // spectrum needs positive integral k_i and nonzero b_i, c_i
  bool can_spectrum = f2.verdict == Verdict::pass;
  for (int i = 0; i < D && can_spectrum; ++i)
    if (a.b_at(i) <= 0 || a.c_at(i + 1) <= 0) can_spectrum = false;
  if (can_spectrum) rep.spectrum = spectrum(a);

  FilterResult f3{"F3", "multiplicities positive integers", Verdict::inapplicable, "spectrum unavailable"};
  if (rep.spectrum) {
    f3.verdict = rep.spectrum->multiplicities_positive_integers() ? Verdict::pass : Verdict::fail;
    f3.witness = (f3.verdict == Verdict::fail ? "non-integral multiplicities: " : "") + detail::spectrum_text(*rep.spectrum);
    if (rep.shape.conference) f3.witness += " (conference form)";
  }
  rep.filters.push_back(f3);

  FilterResult f4{"F4", "Terwilliger inequality chain", Verdict::inapplicable, "requires the contains-quadrangle assumption"};
  FilterResult f5{"F5", "Terwilliger diameter bound", Verdict::inapplicable, "requires the contains-quadrangle assumption"};
  if (assume.contains_quadrangle && D >= 2) {
    const long long a1 = a.a_at(1);
    f4.verdict = Verdict::pass;
    f4.witness = "c_i - b_i >= c_{i-1} - b_{i-1} + a1 + 2 holds for 2 <= i <= D";
    for (int i = 2; i <= D; ++i) {
      long long lhs = a.c_at(i) - a.b_at(i);
      long long rhs = a.c_at(i - 1) - a.b_at(i - 1) + a1 + 2;
      if (lhs < rhs) {
        f4.verdict = Verdict::fail;
        f4.witness = "i = " + detail::ll(i) + ": c" + detail::ll(i) + " - b" + detail::ll(i) + " = " + detail::ll(lhs) +
                     " < c" + detail::ll(i - 1) + " - b" + detail::ll(i - 1) + " + a1 + 2 = " + detail::ll(rhs);
        break;
      }
    }
    // D <= 2k/(a1+2)
    f5.verdict = (D * (a1 + 2) <= 2 * a.k()) ? Verdict::pass : Verdict::fail;
    f5.witness = "D = " + detail::ll(D) + ", 2k/(a1+2) = " + to_string(make_rational(big(2 * a.k()), big(a1 + 2)));
  } else if (assume.contains_quadrangle) {
    f4.witness = f5.witness = "diameter below 2";
  }
  rep.filters.push_back(f4);
  rep.filters.push_back(f5);

  FilterResult f6{"F6", "strongly regular identities", Verdict::inapplicable, "diameter is not 2"};
  if (D == 2) {
    if (!is_integer(p.nu) || f2.verdict != Verdict::pass) {
      f6.verdict = Verdict::fail;
      f6.witness = "nu = " + to_string(p.nu) + " is not an admissible vertex count";
    } else {
      Integer k = big(a.k()), lambda = big(a.a_at(1)), mu = big(a.c[1]);
      Integer lhs = k * (k - lambda - 1), rhs = (p.nu.get_num() - k - 1) * mu;
      f6.verdict = (lhs == rhs && lambda >= 0 && mu >= 1) ? Verdict::pass : Verdict::fail;
      f6.witness = "k(k-lambda-1) = " + lhs.get_str() + ", (nu-k-1)mu = " + rhs.get_str() + ", (nu,k,lambda,mu) = (" +
                   p.nu.get_num().get_str() + "," + k.get_str() + "," + lambda.get_str() + "," + mu.get_str() + ")";
    }
  }
  rep.filters.push_back(f6);

  FilterResult f7{"F7", "eigenvalue integrality", Verdict::inapplicable, ""};
  if (D == 2 && rep.shape.conference) {
    f7.witness = "conference form {2t,t;1,t} is exempt";
  } else if (D == 2 && !rep.shape.complete_multipartite) {
    f7.verdict = Verdict::pass;
  } else if (is_complete_cover_form(a) && a.a_at(1) != a.c[1]) {
    f7.verdict = Verdict::pass;
    f7.witness = "antipodal cover of a complete graph with a1 != c2; ";
  } else {
    f7.witness = "only required for non-conference diameter 2 and for complete-graph covers with a1 != c2";
  }
  if (f7.verdict == Verdict::pass) {
    if (!rep.spectrum) {
      f7.verdict = Verdict::inapplicable;
      f7.witness += "spectrum unavailable";
    } else {
      std::string ev;
      for (const auto& e : rep.spectrum->eigenvalues) ev += (ev.empty() ? "" : ", ") + e.display.to_string();
      if (!rep.spectrum->eigenvalues_integral()) {
        f7.verdict = Verdict::fail;
        f7.witness += "non-integral eigenvalues: " + ev;
      } else {
        f7.witness += "eigenvalues " + ev;
      }
    }
  }
  rep.filters.push_back(f7);
  return rep;
}

}  // namespace drg
