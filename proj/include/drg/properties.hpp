#pragma once

#include "drg/array_spectrum.hpp"
#include "drg/drg_check.hpp"
#include "drg/feasibility.hpp"
#include "drg/graph.hpp"
#include "drg/partition.hpp"
#include "drg/spectral.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace drg {

// ---- local eigenvalue property ---------------------------------------------------

struct LocalVertexSummary {
  int vertex = 0;
  int local_order = 0;
  std::optional<AlgebraicValue> theta1;  // second largest eigenvalue of the local graph; none below 2 vertices
  bool passes = true;                    // theta1 <= t
  int m_x = 0;                           // multiplicity of 1 in the local graph
  bool local_connected = true;
  bool local_complement_connected = true;
};

struct LocalSpectrumSummary {
  Rational threshold = 1;
  bool regular = true;
  std::vector<LocalVertexSummary> vertices;

  bool all_pass() const {
    for (const auto& v : vertices)
      if (!v.passes) return false;
    return true;
  }
  std::optional<int> first_failure() const {
    for (const auto& v : vertices)
      if (!v.passes) return v.vertex;
    return std::nullopt;
  }
};

inline LocalVertexSummary local_vertex_summary(const Graph& g, int x, const Rational& t) {
  LocalVertexSummary s;
  s.vertex = x;
  Graph h = local_graph(g, x);
  s.local_order = h.order();
  s.local_connected = is_connected(h);
  s.local_complement_connected = is_connected(complement(h));
  if (h.order() == 0) return s;
  IntPoly p = char_poly(h.adjacency_matrix());
  s.passes = count_roots_greater(p, t) <= 1;
  s.m_x = multiplicity_of(p, Rational(1));
  if (h.order() >= 2) {
    auto spec = real_spectrum(p);
    s.theta1 = describe(spec[0].multiplicity >= 2 ? spec[0].value : spec[1].value);
  }
  return s;
}

inline LocalSpectrumSummary local_property(const Graph& g, const Rational& t = 1) {
  LocalSpectrumSummary r;
  r.threshold = t;
  r.regular = g.valency().has_value();
  for (int x = 0; x < g.order(); ++x) r.vertices.push_back(local_vertex_summary(g, x, t));
  return r;
}

// (local graph connected, its complement connected) per vertex
inline std::vector<std::pair<bool, bool>> connectivity_props(const Graph& g) {
  std::vector<std::pair<bool, bool>> out;
  for (int x = 0; x < g.order(); ++x) {
    Graph h = local_graph(g, x);
    out.emplace_back(is_connected(h), is_connected(complement(h)));
  }
  return out;
}

// ---- local eigenvalue sandwich for D >= 3 ---------------------------------------------

struct SandwichResult {
  bool holds = true;
  AlgebraicValue upper, lower;  // -1 - b1/(theta_D + 1), -1 - b1/(theta_1 + 1)
  std::string witness;
};

// -1 - b1/(theta + 1) = (-theta - 1 - b1)/(theta + 1)
inline RealAlgebraic local_bound(const RealAlgebraic& theta, long long b1) {
  return mobius(theta, Integer(-1), big(-1 - b1), Integer(1), Integer(1));
}

inline SandwichResult theorem_2_10_sandwich(const Graph& g) {
  DRGCertificate cert = check_drg(g);
  if (!cert.distance_regular()) throw std::invalid_argument("sandwich check needs a distance-regular graph");
  const IntersectionArray& a = *cert.array;
  if (a.diameter() < 3) throw std::invalid_argument("sandwich check needs diameter >= 3");
  SpectrumEstimate est = spectrum(a);
  const RealAlgebraic& th1 = est.eigenvalues[1].value;
  const RealAlgebraic& thD = est.eigenvalues.back().value;
  SandwichResult r;
  RealAlgebraic up = local_bound(thD, a.b[1]);
  RealAlgebraic lo = local_bound(th1, a.b[1]);
  r.upper = describe(up);
  r.lower = describe(lo);
  for (int x = 0; x < g.order(); ++x) {
    Graph h = local_graph(g, x);
    IntPoly p = char_poly(h.adjacency_matrix());
    // lambda_2 <= up: at most one root above up
    if (count_roots_greater(p, up) > 1) {
      r.holds = false;
      r.witness = "vertex " + std::to_string(x) + ": second local eigenvalue above " + r.upper.to_string();
      return r;
    }
    if (count_roots_at_least(p, lo) != h.order()) {
      r.holds = false;
      r.witness = "vertex " + std::to_string(x) + ": smallest local eigenvalue below " + r.lower.to_string();
      return r;
    }
  }
  r.witness = "all " + std::to_string(g.order()) + " local graphs lie in [" + r.lower.to_string() + ", " + r.upper.to_string() + "]";
  return r;
}

// ---- two-part partition bound ------------------------------------------------------

class LemmaInapplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PartitionBoundResult {
  Rational alpha, beta, bound;  // bound = (k-1)|B|/nu
  bool bound_holds = false;     // alpha >= bound
  bool equality = false;
  bool equitable = false;
  bool consistent() const { return bound_holds && (!equality || equitable); }
};

inline PartitionBoundResult partition_bound(const Graph& g, const std::vector<int>& A) {
  auto k = g.valency();
  if (!k) throw LemmaInapplicable("lemma inapplicable: graph is not regular");
  if (count_roots_greater(char_poly(g.adjacency_matrix()), Rational(1)) > 1)
    throw LemmaInapplicable("lemma inapplicable: second largest eigenvalue exceeds 1");
  const int n = g.order();
  std::vector<bool> inA(static_cast<size_t>(n), false);
  for (int v : A) {
    if (v < 0 || v >= n || inA[static_cast<size_t>(v)]) throw std::invalid_argument("A must be a set of vertices");
    inA[static_cast<size_t>(v)] = true;
  }
  if (A.empty() || static_cast<int>(A.size()) == n) throw std::invalid_argument("A must be a nonempty proper subset");
  VertexPartition p;
  p.blocks.resize(2);
  for (int v = 0; v < n; ++v) p.blocks[inA[static_cast<size_t>(v)] ? 0 : 1].push_back(v);
  QuotientResult q = quotient_matrix(g, p);
  PartitionBoundResult r;
  r.alpha = q.matrix(0, 1);
  r.beta = q.matrix(1, 0);
  r.bound = make_rational(big(*k - 1) * static_cast<long>(p.blocks[1].size()), n);
  r.bound_holds = r.alpha >= r.bound;
  r.equality = r.alpha == r.bound;
  r.equitable = q.equitable;
  return r;
}

// Local form for an SRG (nu, k, lambda, mu) whose local graphs are SRG with parameter mu_bar:
// A = common neighbours of u, v at distance 2 inside the local graph of v.  Each vertex of A
// has exactly mu_bar neighbours in A, so alpha = lambda - mu_bar; the bound is (lambda-1)(k-mu)/k.
struct LocalPartitionBound {
  Rational bound;
  Rational alpha;
  bool contradiction = false;  // alpha < bound
  bool needs_equitable = false;
  std::string witness;
};

inline LocalPartitionBound local_partition_bound(const SRGParams& p, long long local_mu) {
  LocalPartitionBound r;
  r.bound = make_rational((p.lambda - 1) * (p.k - p.mu), p.k);
  r.alpha = Rational(p.lambda - big(local_mu));
  r.contradiction = r.alpha < r.bound;
  r.needs_equitable = r.alpha == r.bound;
  r.witness = "bound (lambda-1)(k-mu)/k = " + to_string(r.bound) + ", alpha = lambda - local mu = " + to_string(r.alpha) +
              (r.contradiction ? " < bound" : (r.needs_equitable ? " = bound (partition must be equitable)" : " > bound"));
  return r;
}

// ---- small induced subgraph searches -------------------------------------------------

// induced K_{2,1,1} (a diamond): adjacent u, v with two nonadjacent common neighbours
inline std::optional<std::array<int, 4>> find_induced_k211(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    Bitset common = g.neighbours(u) & g.neighbours(v);
    auto c = common.elements();
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) return std::array<int, 4>{u, v, c[i], c[j]};
  }
  return std::nullopt;
}

inline bool has_induced_k211(const Graph& g) { return find_induced_k211(g).has_value(); }

// induced 4-cycle u - a - w - b - u with u !~ w and a !~ b
inline std::optional<std::array<int, 4>> find_induced_quadrangle(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      auto c = (g.neighbours(u) & g.neighbours(w)).elements();
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
          if (!g.adjacent(c[i], c[j])) return std::array<int, 4>{u, c[i], w, c[j]};
    }
  return std::nullopt;
}

// F4/F5 applied to a certified graph when it really contains a quadrangle
inline std::optional<FeasibilityReport> terwilliger_check(const Graph& g) {
  if (!find_induced_quadrangle(g)) return std::nullopt;
  DRGCertificate cert = check_drg(g);
  if (!cert.distance_regular()) throw std::invalid_argument("not distance-regular");
  return feasibility(*cert.array, Assumptions{true});
}

}  // namespace drg
