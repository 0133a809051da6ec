#pragma once

#include "drg/array_spectrum.hpp"
#include "drg/constructions.hpp"
#include "drg/corpus.hpp"
#include "drg/feasibility.hpp"
#include "drg/parallel.hpp"
#include "drg/properties.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace drg {

class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, open, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::open:
      return "open";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::string family;  // family string, empty for open arrays
  Status status = Status::pass;
  std::optional<IntersectionArray> expected, certified;
  std::vector<Check> checks;
  std::string note;

  void add(Check c) {
    if (!c.passed) status = Status::fail;
    checks.push_back(std::move(c));
  }
};

inline bool any_failed(const std::vector<VerificationReport>& rs) {
  for (const auto& r : rs)
    if (r.status == Status::fail) return true;
  return false;
}

// ---- printed arrays, recomputed from the family formulas ------------------------

inline IntersectionArray srg_to_array(long long k, long long lambda, long long mu) { return IntersectionArray{{k, k - lambda - 1}, {1, mu}}; }

struct SrgTuple {
  long long v, k, lambda, mu;
  SrgTuple complement() const { return {v, v - k - 1, v - 2 - 2 * k + mu, v - 2 * k + lambda}; }
  IntersectionArray array() const { return srg_to_array(k, lambda, mu); }
};

inline std::optional<SrgTuple> srg_formula(const FamilySpec& f) {
  const auto& p = f.params;
  const std::string& n = f.name;
  if (n == "multipartite") return SrgTuple{1LL * p[0] * p[1], 1LL * (p[0] - 1) * p[1], 1LL * (p[0] - 2) * p[1], 1LL * (p[0] - 1) * p[1]};
  if (n == "grid") return SrgTuple{1LL * p[0] * p[0], 2LL * (p[0] - 1), p[0] - 2LL, 2};
  if (n == "grid-complement") return SrgTuple{1LL * p[0] * p[0], 2LL * (p[0] - 1), p[0] - 2LL, 2}.complement();
  if (n == "triangular") return SrgTuple{1LL * p[0] * (p[0] - 1) / 2, 2LL * (p[0] - 2), p[0] - 2LL, 4};
  if (n == "petersen") return SrgTuple{10, 3, 0, 1};
  if (n == "shrikhande") return SrgTuple{16, 6, 2, 2};
  if (n == "chang") return SrgTuple{28, 12, 6, 4};
  if (n == "schlafli") return SrgTuple{27, 16, 10, 8};
  if (n == "clebsch" && p[0] == 5) return SrgTuple{16, 5, 0, 2};
  if (n == "clebsch" && p[0] == 10) return SrgTuple{16, 10, 6, 6};
  if (n == "folded-cube" && p[0] == 5) return SrgTuple{16, 5, 0, 2};
  if (n == "paley") return SrgTuple{p[0], (p[0] - 1) / 2, (p[0] - 5) / 4, (p[0] - 1) / 4};
  return std::nullopt;
}

inline std::optional<IntersectionArray> formula_array(const std::string& family) {
  FamilySpec f = FamilySpec::parse(family);
  const auto& p = f.params;
  if (auto s = srg_formula(f)) {
    SrgTuple t = f.complemented ? s->complement() : *s;
    return t.array();
  }
  if (f.complemented) return std::nullopt;
  if (f.name == "complete") return IntersectionArray{{p[0] - 1LL}, {1}};
  if (f.name == "johnson") {
    int n = p[0], k = p[1], d = std::min(k, n - k);
    IntersectionArray a;
    for (int i = 0; i < d; ++i) a.b.push_back(1LL * (k - i) * (n - k - i));
    for (int i = 1; i <= d; ++i) a.c.push_back(1LL * i * i);
    return a;
  }
  if (f.name == "symplectic-cover") {
    long long q = p[0], r = p[1], m = (q - 1) / r;
    return IntersectionArray{{q, q - m - 1, 1}, {1, m, q}};
  }
  // arrays as printed in the classification
  if (f.name == "icosahedron") return IntersectionArray::parse("{5,2,1;1,2,5}");
  if (f.name == "halved-cube-distance-2" && p[0] == 6) return IntersectionArray::parse("{15,8,1;1,8,15}");
  if (f.name == "gosset") return IntersectionArray::parse("{27,16,1;1,16,27}");
  if (f.name == "doro") return IntersectionArray::parse("{10,6,4;1,2,5}");
  if (f.name == "conway-smith") return IntersectionArray::parse("{10,6,4,1;1,2,6,10}");
  return std::nullopt;
}

// build + certify against the formula; a mismatch aborts the whole suite
inline std::pair<Graph, IntersectionArray> certified_build(const std::string& name, const std::string& family) {
  Graph g = build(family);
  DRGCertificate cert = check_drg(g);
  if (!cert.distance_regular())
    throw CertificationFailure(name + " (" + family + "): not distance-regular: " + cert.violation->what);
  auto expected = formula_array(family);
  if (!expected) throw CertificationFailure(name + " (" + family + "): no formula array");
  if (*cert.array != *expected)
    throw CertificationFailure(name + " (" + family + "): certified " + cert.array->str() + ", expected " + expected->str());
  return {std::move(g), *cert.array};
}

// ---- the local second-eigenvalue suite -----------------------------------------

struct SuiteEntry {
  std::string name;
  std::string family;
};

inline const std::vector<SuiteEntry>& local_suite_entries() {
  static const std::vector<SuiteEntry> e{
      {"complete graph K_4", "complete:4"},
      {"complete graph K_7", "complete:7"},
      {"complete multipartite K_{4x2}", "multipartite:4,2"},
      {"complete multipartite K_{5x3}", "multipartite:5,3"},
      {"complement of the 4x4 grid", "grid-complement:4"},
      {"complement of the 5x5 grid", "grid-complement:5"},
      {"complement of T(5)", "co-triangular:5"},
      {"complement of T(6)", "co-triangular:6"},
      {"complement of T(7)", "co-triangular:7"},
      {"complement of T(8)", "co-triangular:8"},
      {"complement of the Petersen graph", "co-petersen"},
      {"complement of the Shrikhande graph", "co-shrikhande"},
      {"complement of Chang graph 1", "co-chang:1"},
      {"complement of Chang graph 2", "co-chang:2"},
      {"complement of Chang graph 3", "co-chang:3"},
      {"Shrikhande graph", "shrikhande"},
      {"Clebsch graph", "clebsch:10"},
      {"Paley graph P(13)", "paley:13"},
      {"Paley graph P(17)", "paley:17"},
      {"icosahedron", "icosahedron"},
      {"Johnson graph J(6,3)", "johnson:6,3"},
      {"Doro graph", "doro"},
      {"distance-2 graph of the halved 6-cube", "halved-cube-distance-2:6"},
      {"locally folded 5-cube graph", "symplectic-cover:16,3,1"},
      {"Gosset graph", "gosset"},
      {"Conway-Smith graph", "conway-smith"},
  };
  return e;
}

inline const std::vector<IntersectionArray>& open_arrays() {
  static const std::vector<IntersectionArray> a{
      IntersectionArray::parse("{12,6;1,6}"),  IntersectionArray::parse("{15,8;1,6}"),  IntersectionArray::parse("{18,10;1,6}"),
      IntersectionArray::parse("{21,12;1,6}"), IntersectionArray::parse("{21,12;1,9}"), IntersectionArray::parse("{27,16;1,12}"),
  };
  return a;
}

inline std::string theta1_summary(const LocalSpectrumSummary& s) {
  std::set<std::string> vals;
  for (const auto& v : s.vertices)
    if (v.theta1) vals.insert(v.theta1->to_string());
  std::string out;
  for (const auto& v : vals) out += (out.empty() ? "" : ", ") + v;
  return out.empty() ? "none (local graphs below 2 vertices)" : out;
}

inline VerificationReport verify_local_entry(const SuiteEntry& e) {
  VerificationReport r;
  r.name = e.name;
  r.family = e.family;
  auto [g, arr] = certified_build(e.name, e.family);
  r.expected = formula_array(e.family);
  r.certified = arr;
  r.add({"intersection array", true, "certified " + arr.str() + " on " + std::to_string(g.order()) + " vertices"});
  LocalSpectrumSummary s = local_property(g, 1);
  if (s.all_pass()) {
    r.add({"local second eigenvalue <= 1", true, "all " + std::to_string(g.order()) + " local graphs; theta1 values: " + theta1_summary(s)});
  } else {
    const auto& v = s.vertices[static_cast<size_t>(*s.first_failure())];
    r.add({"local second eigenvalue <= 1", false,
           "vertex " + std::to_string(v.vertex) + ": theta1 = " + (v.theta1 ? v.theta1->to_string() : std::string("?"))});
  }
  if (arr.diameter() >= 3) {
    SandwichResult sw = theorem_2_10_sandwich(g);
    r.add({"local eigenvalue sandwich", sw.holds, sw.witness});
  }
  if (e.family == "symplectic-cover:16,3,1") {
    bool loc = is_locally(g, build("folded-cube:5"));
    r.add({"locally folded 5-cube", loc, loc ? "every local graph is isomorphic to folded-cube:5" : "some local graph is not the folded 5-cube"});
  }
  return r;
}

inline VerificationReport open_entry(const IntersectionArray& a) {
  VerificationReport r;
  r.name = "open array " + a.str();
  r.status = Status::open;
  r.expected = a;
  FeasibilityReport f = feasibility(a, Assumptions{true});
  r.checks.push_back({"feasibility", f.surviving(), f.verdict()});
  r.note = "no graph constructed; existence is left open";
  return r;
}

inline std::vector<VerificationReport> verify_theorem_1_2() {
  auto out = parallel_map(local_suite_entries(), verify_local_entry);
  for (const auto& a : open_arrays()) out.push_back(open_entry(a));
  return out;
}

// ---- smallest eigenvalue -1 - b1/2 ---------------------------------------------

inline const std::vector<SuiteEntry>& smallest_eigenvalue_entries() {
  static const std::vector<SuiteEntry> e{
      {"complete multipartite K_{4x2}", "multipartite:4,2"},
      {"complete multipartite K_{5x3}", "multipartite:5,3"},
      {"complement of the 4x4 grid", "grid-complement:4"},
      {"complement of the 5x5 grid", "grid-complement:5"},
      {"complement of T(5)", "co-triangular:5"},
      {"complement of T(6)", "co-triangular:6"},
      {"complement of T(7)", "co-triangular:7"},
      {"complement of T(8)", "co-triangular:8"},
      {"complement of the Petersen graph", "co-petersen"},
      {"complement of the Shrikhande graph", "co-shrikhande"},
      {"complement of Chang graph 1", "co-chang:1"},
      {"complement of Chang graph 2", "co-chang:2"},
      {"complement of Chang graph 3", "co-chang:3"},
      {"Johnson graph J(6,3)", "johnson:6,3"},
      {"distance-2 graph of the halved 6-cube", "halved-cube-distance-2:6"},
      {"Gosset graph", "gosset"},
      {"Conway-Smith graph", "conway-smith"},
  };
  return e;
}

inline VerificationReport verify_smallest_entry(const SuiteEntry& e) {
  VerificationReport r;
  r.name = e.name;
  r.family = e.family;
  auto [g, arr] = certified_build(e.name, e.family);
  r.expected = formula_array(e.family);
  r.certified = arr;
  r.add({"intersection array", true, "certified " + arr.str()});
  if (arr.a_at(1) <= 1) {
    r.status = Status::skipped;
    r.note = "a1 = " + std::to_string(arr.a_at(1)) + " <= 1, outside the a1 >= 2 part of the list";
    return r;
  }
  RealAlgebraic smallest = smallest_root(char_poly(g.adjacency_matrix()));
  Rational target = Rational(-1) - make_rational(big(arr.b_at(1)), 2);
  bool eq = compare(smallest, RealAlgebraic(target)) == 0;
  r.add({"smallest eigenvalue = -1 - b1/2", eq,
         "smallest eigenvalue " + describe(smallest).to_string() + (eq ? " = " : " != ") + "-1 - b1/2 = " + to_string(target)});
  return r;
}

inline std::vector<VerificationReport> verify_theorem_1_1() { return parallel_map(smallest_eigenvalue_entries(), verify_smallest_entry); }

// ---- universal property suite --------------------------------------------------

struct PropertyOptions {
  std::uint64_t seed = 20240615;
  int principal_instances = 120;
  int partition_instances = 120;
  int bound_instances = 60;
};

namespace prop_detail {

struct Prepared {
  std::string family;
  Graph g;
  IntersectionArray arr;
  IntPoly charA;
  bool theta1_at_most_1;
};

inline std::vector<int> random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(static_cast<size_t>(size));
  std::sort(v.begin(), v.end());
  return v;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Tally {
  int instances = 0;
  std::vector<std::string> violations;
  Check check(const std::string& name, const std::string& what) const {
    Check c{name, violations.empty(), std::to_string(instances) + " " + what + ", " + std::to_string(violations.size()) + " violations"};
    for (const auto& v : violations) c.detail += "; " + v;
    return c;
  }
};

}  // namespace prop_detail

inline std::vector<VerificationReport> verify_properties(const PropertyOptions& opt = {}) {
  using namespace prop_detail;
  std::vector<Prepared> corpus = parallel_map(corpus_families(), [](const std::string& f) {
    Graph g = build(f);
    DRGCertificate c = check_drg(g);
    if (!c.distance_regular()) throw CertificationFailure(f + ": not distance-regular");
    IntPoly p = char_poly(g.adjacency_matrix());
    return Prepared{f, std::move(g), *c.array, p, count_roots_greater(p, Rational(1)) <= 1};
  });
  std::vector<VerificationReport> out;
  std::mt19937_64 rng(opt.seed);

  std::vector<const Prepared*> small;
  for (const auto& c : corpus)
    if (c.g.order() <= 40) small.push_back(&c);

  {
    VerificationReport r;
    r.name = "interlacing of principal submatrices";
    std::vector<std::pair<const Prepared*, std::vector<int>>> jobs;
    for (int i = 0; i < opt.principal_instances; ++i) {
      const Prepared* c = small[static_cast<size_t>(uniform(rng, 0, static_cast<int>(small.size()) - 1))];
      int n = c->g.order();
      jobs.emplace_back(c, random_subset(rng, n, uniform(rng, 1, n - 1)));
    }
    auto res = parallel_map(jobs, [](const std::pair<const Prepared*, std::vector<int>>& j) -> std::optional<std::string> {
      Graph h = induced_subgraph(j.first->g, j.second);
      auto f = interlacing_violation(j.first->charA, char_poly(h.adjacency_matrix()));
      if (f) return j.first->family + " on " + std::to_string(j.second.size()) + " vertices: " + f->detail;
      return std::nullopt;
    });
    Tally t;
    t.instances = static_cast<int>(jobs.size());
    for (auto& v : res)
      if (v) t.violations.push_back(*v);
    r.add(t.check("principal submatrix interlacing", "random induced subgraphs"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "interlacing of partition quotients";
    std::vector<std::pair<const Prepared*, VertexPartition>> jobs;
    for (int i = 0; i < opt.partition_instances; ++i) {
      const Prepared* c = small[static_cast<size_t>(uniform(rng, 0, static_cast<int>(small.size()) - 1))];
      int n = c->g.order();
      int blocks = uniform(rng, 2, std::min(6, n));
      std::vector<int> perm = random_subset(rng, n, n);
      std::shuffle(perm.begin(), perm.end(), rng);
      VertexPartition p;
      p.blocks.resize(static_cast<size_t>(blocks));
      for (int b = 0; b < blocks; ++b) p.blocks[static_cast<size_t>(b)].push_back(perm[static_cast<size_t>(b)]);
      for (int v = blocks; v < n; ++v) p.blocks[static_cast<size_t>(uniform(rng, 0, blocks - 1))].push_back(perm[static_cast<size_t>(v)]);
      for (auto& b : p.blocks) std::sort(b.begin(), b.end());
      jobs.emplace_back(c, std::move(p));
    }
    auto res = parallel_map(jobs, [](const std::pair<const Prepared*, VertexPartition>& j) -> std::optional<std::string> {
      QuotientResult q = quotient_matrix(j.first->g, j.second);
      auto f = interlacing_violation(j.first->charA, char_poly(q.matrix));
      if (f) return j.first->family + " with " + std::to_string(j.second.blocks.size()) + " blocks: " + f->detail;
      return std::nullopt;
    });
    Tally t;
    t.instances = static_cast<int>(jobs.size());
    for (auto& v : res)
      if (v) t.violations.push_back(*v);
    r.add(t.check("quotient interlacing", "random partitions"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "Terwilliger chain on graphs with an induced quadrangle";
    auto res = parallel_map(corpus, [](const Prepared& c) -> std::pair<int, std::optional<std::string>> {
      auto rep = terwilliger_check(c.g);
      if (!rep) return {0, std::nullopt};
      for (const char* id : {"F4", "F5"}) {
        const FilterResult& f = rep->filter(id);
        if (f.verdict == Verdict::fail) return {1, c.family + ": " + f.witness};
      }
      return {1, std::nullopt};
    });
    Tally t;
    for (auto& [n, v] : res) {
      t.instances += n;
      if (v) t.violations.push_back(*v);
    }
    r.add(t.check("c_i - b_i >= c_{i-1} - b_{i-1} + a1 + 2", "corpus graphs with a quadrangle"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "local eigenvalue sandwich for diameter >= 3";
    std::vector<const Prepared*> d3;
    for (const auto& c : corpus)
      if (c.arr.diameter() >= 3) d3.push_back(&c);
    auto res = parallel_map(d3, [](const Prepared* c) -> std::optional<std::string> {
      SandwichResult s = theorem_2_10_sandwich(c->g);
      if (!s.holds) return c->family + ": " + s.witness;
      return std::nullopt;
    });
    Tally t;
    t.instances = static_cast<int>(d3.size());
    for (auto& v : res)
      if (v) t.violations.push_back(*v);
    r.add(t.check("-1 - b1/(theta_D + 1) >= lambda_2 >= lambda_min >= -1 - b1/(theta_1 + 1)", "corpus graphs"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "local connectivity under the local eigenvalue hypothesis";
    std::vector<std::string> fams;
    for (const auto& e : local_suite_entries()) fams.push_back(e.family);
    auto res = parallel_map(fams, [](const std::string& f) -> std::pair<int, std::optional<std::string>> {
      Graph g = build(f);
      DRGCertificate c = check_drg(g);
      const IntersectionArray& a = *c.array;
      // K_n counts as K_{n x 1}
      bool multipartite = a.diameter() == 1 || (a.diameter() == 2 && a.c[1] == a.k());
      if (a.a_at(1) < 2) return {0, std::nullopt};
      auto flags = connectivity_props(g);
      for (size_t x = 0; x < flags.size(); ++x) {
        if (!flags[x].first) return {1, f + ": local graph of vertex " + std::to_string(x) + " is disconnected"};
        if (!multipartite && !flags[x].second)
          return {1, f + ": complement of the local graph of vertex " + std::to_string(x) + " is disconnected"};
        if (multipartite && flags[x].second)
          return {1, f + ": complete multipartite but the local complement of vertex " + std::to_string(x) + " is connected"};
      }
      return {1, std::nullopt};
    });
    Tally t;
    for (auto& [n, v] : res) {
      t.instances += n;
      if (v) t.violations.push_back(*v);
    }
    r.add(t.check("local graph connected; local complement connected unless complete multipartite", "graphs with a1 >= 2"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "two-part partition bound";
    std::vector<const Prepared*> hyp;
    for (const auto& c : corpus)
      if (c.theta1_at_most_1 && c.g.order() >= 2) hyp.push_back(&c);
    std::vector<std::pair<const Prepared*, std::vector<int>>> jobs;
    for (int i = 0; i < opt.bound_instances; ++i) {
      const Prepared* c = hyp[static_cast<size_t>(uniform(rng, 0, static_cast<int>(hyp.size()) - 1))];
      int n = c->g.order();
      jobs.emplace_back(c, random_subset(rng, n, uniform(rng, 1, n - 1)));
    }
    auto res = parallel_map(jobs, [](const std::pair<const Prepared*, std::vector<int>>& j) -> std::optional<std::string> {
      PartitionBoundResult b = partition_bound(j.first->g, j.second);
      if (!b.consistent())
        return j.first->family + ": alpha = " + to_string(b.alpha) + ", bound = " + to_string(b.bound) + (b.equality ? ", equality without equitable partition" : "");
      return std::nullopt;
    });
    Tally t;
    t.instances = static_cast<int>(jobs.size());
    for (auto& v : res)
      if (v) t.violations.push_back(*v);
    r.add(t.check("alpha >= (k-1)|B|/nu, equitable on equality", "random subsets"));
    // equality instance: a triangle in the complement of the Schlafli graph
    Graph cs = complement(schlafli());
    std::vector<int> tri;
    for (auto [u, v] : cs.edges()) {
      auto c = (cs.neighbours(u) & cs.neighbours(v)).elements();
      if (!c.empty()) {
        tri = {u, v, c[0]};
        break;
      }
    }
    std::sort(tri.begin(), tri.end());
    PartitionBoundResult b = partition_bound(cs, tri);
    r.add({"equality instance (triangle in the complement of the Schlafli graph)", b.equality && b.equitable,
           "alpha = " + to_string(b.alpha) + ", bound = " + to_string(b.bound) + ", equitable = " + (b.equitable ? "yes" : "no")});
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "Taylor graphs have strongly regular local graphs with 2 mu = k = a1";
    Tally t;
    for (const auto& c : corpus) {
      // a1 <= 1 Taylor shapes (C6, ...) have disconnected local graphs and sit outside the classification
      if (!classify_shape(c.arr).taylor || c.arr.a_at(1) < 2) continue;
      ++t.instances;
      DRGCertificate lc = check_drg(local_graph(c.g, 0));
      long long a1 = c.arr.a_at(1);
      bool ok = lc.array && lc.array->diameter() == 2 && lc.array->k() == a1 && 2 * lc.array->c[1] == lc.array->k();
      // every vertex, not just one
      for (int x = 1; ok && x < c.g.order(); ++x) {
        DRGCertificate lx = check_drg(local_graph(c.g, x));
        ok = lx.array && *lx.array == *lc.array;
      }
      if (!ok) t.violations.push_back(c.family + ": local graph " + (lc.array ? lc.array->str() : std::string("not distance-regular")));
    }
    r.add(t.check("local graph SRG with 2 mu = k = a1", "Taylor graphs"));
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.name = "local multiplicity of 1 bounded by 1 + k2";
    std::vector<const Prepared*> cands;
    for (const auto& c : corpus)
      if (c.arr.diameter() == 2 && !c.theta1_at_most_1) cands.push_back(&c);
    auto res = parallel_map(cands, [](const Prepared* c) -> std::pair<int, std::optional<std::string>> {
      LocalSpectrumSummary s = local_property(c->g, 1);
      if (!s.all_pass()) return {0, std::nullopt};
      DRGParams p = derive(c->arr);
      Rational k2 = p.ki[2];
      for (const auto& v : s.vertices)
        if (Rational(v.m_x) > k2 + 1)
          return {1, c->family + ": vertex " + std::to_string(v.vertex) + " has m_x = " + std::to_string(v.m_x) + " > 1 + k2 = " + to_string(Rational(k2 + 1))};
      return {1, std::nullopt};
    });
    Tally t;
    for (auto& [n, v] : res) {
      t.instances += n;
      if (v) t.violations.push_back(*v);
    }
    r.add(t.check("m_x <= 1 + k2", "strongly regular graphs with theta1 > 1 satisfying the local hypothesis"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace drg
