// One PASS/FAIL line per acceptance criterion.
// Exit status is 0 unless a criterion could not be evaluated at all.

#include "drg/corpus.hpp"
#include "drg/properties.hpp"
#include "drg/scans.hpp"
#include "drg/verify.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace drg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

IntersectionArray A(const char* s) { return IntersectionArray::parse(s); }

std::set<std::string> strs(const std::vector<IntersectionArray>& v) {
  std::set<std::string> s;
  for (const auto& a : v) s.insert(a.str());
  return s;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what;
}

Outcome local_eigenvalue_suite() {
  Outcome o;
  int built = 0, open = 0;
  for (const auto& r : verify_theorem_1_2()) {
    if (r.status == Status::open) {
      ++open;
      continue;
    }
    ++built;
    require(o, r.status == Status::pass, r.name + " " + to_string(r.status));
  }
  require(o, open == 6, std::to_string(open) + " arrays reported open, expected 6");
  if (o.pass) o.detail = std::to_string(built) + " graphs certified with theta1 <= 1 everywhere, 6 arrays open";
  return o;
}

Outcome smallest_eigenvalue_suite() {
  Outcome o;
  int checked = 0;
  for (const auto& r : verify_theorem_1_1()) {
    if (r.status == Status::skipped) continue;
    ++checked;
    if (r.status != Status::pass) {
      std::string d;
      for (const auto& c : r.checks)
        if (!c.passed) d = c.detail;
      require(o, false, r.name + ": " + d);
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " graphs have smallest eigenvalue -1 - b1/2";
  return o;
}

Outcome spectrum_oracle(const std::vector<CorpusGraph>& corpus) {
  Outcome o;
  auto mismatches = parallel_map(corpus, [](const CorpusGraph& c) -> std::string {
    DRGCertificate cert = check_drg(c.graph);
    if (!cert.distance_regular()) return c.family + " not distance-regular";
    auto exact = real_spectrum(char_poly(c.graph.adjacency_matrix()));
    SpectrumEstimate s = spectrum(*cert.array);
    if (s.eigenvalues.size() != exact.size()) return c.family + " eigenvalue count differs";
    for (size_t i = 0; i < exact.size(); ++i) {
      const auto& e = s.eigenvalues[i];
      if (compare(e.value, exact[i].value) != 0) return c.family + " eigenvalue " + std::to_string(i) + " differs";
      if (!e.multiplicity || *e.multiplicity != exact[i].multiplicity) return c.family + " multiplicity " + std::to_string(i) + " differs";
    }
    return "";
  });
  for (const auto& m : mismatches) require(o, m.empty(), m);
  if (o.pass) o.detail = std::to_string(corpus.size()) + " corpus graphs agree";
  return o;
}

Outcome case_one_survivors(const ScanResult& r) {
  Outcome o;
  std::set<std::string> got;
  for (const auto* e : r.get("diam3-case1").surviving("parameters")) got.insert(e->params);
  std::set<std::string> want{"t=4, alpha=1", "t=5, alpha=1", "t=6, alpha=1", "t=4, alpha=2"};
  require(o, got == want, "survivor set differs");
  if (o.pass) o.detail = "{(4,1),(5,1),(6,1),(4,2)}";
  return o;
}

Outcome arithmetic_eliminations() {
  Outcome o;
  auto e = feasibility(A("{28,12,1;1,6,28}"), {true}).primary_failure();
  require(o, e && e->id == "F7", "{28,12,1;1,6,28} not killed by eigenvalue integrality");
  auto m = feasibility(A("{21,12,1;1,4,21}"), {}).primary_failure();
  require(o, m && m->id == "F3", "{21,12,1;1,4,21} not killed by multiplicity integrality");
  LocalPartitionBound b = local_partition_bound(srg_params(A("{28,12;1,16}")), 10);
  require(o, b.bound == 6 && b.contradiction, "{28,12;1,16} bound " + to_string(b.bound));
  if (o.pass) o.detail = "F7, F3, and partition bound 6 with alpha " + to_string(b.alpha);
  return o;
}

Outcome diameter_two_scan() {
  Outcome o;
  ScanResult r = scan_diameter2();
  std::vector<ScanCase> cases(r.cases.begin(), r.cases.end() - 1);
  auto claim = strs(claim_arrays(cases));
  std::set<std::string> want_claim{"{45,16;1,24}", "{28,12;1,16}", "{27,16;1,6}", "{27,16;1,12}", "{24,14;1,6}",
                                   "{21,12;1,6}",  "{21,12;1,9}",  "{18,10;1,6}", "{15,8;1,6}",   "{12,6;1,6}"};
  require(o, claim == want_claim, "claim list differs");
  const ScanCase& fin = r.get("diam2-final");
  int killed = 0;
  for (const auto& e : fin.entries)
    if (e.fate != Fate::surviving) {
      ++killed;
      require(o, !e.filter.empty(), e.array->str() + " killed without attribution");
    }
  require(o, killed == 4, std::to_string(killed) + " post-claim kills");
  auto surv = strs(fin.surviving_arrays());
  require(o, surv == strs(open_arrays()), "survivors differ from the open arrays");
  if (o.pass) o.detail = "10 claim arrays, 4 attributed kills, 6 survivors";
  return o;
}

Outcome cover_on_51() {
  Outcome o;
  Graph g = build("symplectic-cover:16,3,1");
  require(o, g.order() == 51, std::to_string(g.order()) + " vertices");
  DRGCertificate c = check_drg(g);
  require(o, c.distance_regular() && c.array->str() == "{16,10,1;1,5,16}", "array");
  Graph f = folded_cube(5);
  DRGCertificate fc = check_drg(f);
  require(o, fc.distance_regular() && srg_params(*fc.array).str() == "(16,5,0,2)", "folded 5-cube parameters");
  require(o, is_locally(g, f), "not locally folded 5-cube");
  if (o.pass) o.detail = "51 vertices, {16,10,1;1,5,16}, locally SRG(16,5,0,2)";
  return o;
}

Outcome property_tests() {
  Outcome o;
  PropertyOptions opt;
  int instances = opt.principal_instances + opt.partition_instances + opt.bound_instances;
  require(o, instances >= 200, "only " + std::to_string(instances) + " random instances");
  auto rs = verify_properties(opt);
  for (const auto& r : rs) require(o, r.status == Status::pass, r.name);
  if (o.pass) o.detail = std::to_string(rs.size()) + " properties, " + std::to_string(instances) + " random instances, no violations";
  return o;
}

Outcome chang_graphs() {
  Outcome o;
  std::vector<Graph> c{chang(1), chang(2), chang(3)};
  Graph t8 = triangular(8);
  for (size_t i = 0; i < c.size(); ++i) {
    DRGCertificate cert = check_drg(c[i]);
    require(o, cert.distance_regular() && srg_params(*cert.array).str() == "(28,12,6,4)", "chang " + std::to_string(i + 1) + " parameters");
    require(o, !isomorphic(c[i], t8), "chang " + std::to_string(i + 1) + " is T(8)");
    for (size_t j = i + 1; j < c.size(); ++j) require(o, !isomorphic(c[i], c[j]), "chang graphs coincide");
    require(o, local_property(complement(c[i]), 1).all_pass(), "complement fails the local property");
  }
  if (o.pass) o.detail = "three distinct SRG(28,12,6,4), none T(8), complements locally theta1 <= 1";
  return o;
}

Outcome float_cross_check(const std::vector<CorpusGraph>& corpus) {
  Outcome o;
  struct Tally {
    int compared = 0, near = 0;
    std::vector<std::string> bad;
  };
  auto tallies = parallel_map(corpus, [](const CorpusGraph& c) {
    Tally t;
    for (int x = 0; x < c.graph.order(); ++x) {
      Graph h = local_graph(c.graph, x);
      const int m = h.order();
      if (m < 2) continue;
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
      for (auto [u, v] : h.edges()) M(u, v) = M(v, u) = 1;
      Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M, Eigen::EigenvaluesOnly).eigenvalues();
      double theta1 = ev(m - 2);  // ascending order
      if (std::abs(theta1 - 1.0) <= 1e-6) {
        ++t.near;
        continue;
      }
      ++t.compared;
      bool exact = count_roots_greater(char_poly(h.adjacency_matrix()), Rational(1)) <= 1;
      if (exact != (theta1 <= 1.0)) t.bad.push_back(c.family + " vertex " + std::to_string(x));
    }
    return t;
  });
  int compared = 0, near = 0;
  for (const auto& t : tallies) {
    compared += t.compared;
    near += t.near;
    for (const auto& b : t.bad) require(o, false, b);
  }
  if (o.pass) o.detail = std::to_string(compared) + " local graphs agree, " + std::to_string(near) + " within 1e-6 of 1 left to the exact path";
  return o;
}

}  // namespace

int main() {
  bool internal_error = false;
  std::vector<CorpusGraph> corpus;
  std::optional<ScanResult> d3;

  auto run = [&](int n, const std::string& title, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
      internal_error = true;
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << o.detail << ")" << std::endl;
  };

  try {
    corpus = build_corpus();
    d3 = scan_diameter3plus();
  } catch (const std::exception& e) {
    std::cerr << "setup failed: " << e.what() << "\n";
    return 2;
  }

  run(1, "local eigenvalue suite", local_eigenvalue_suite);
  run(2, "smallest eigenvalue suite", smallest_eigenvalue_suite);
  run(3, "array spectrum equals adjacency spectrum", [&] { return spectrum_oracle(corpus); });
  run(4, "diameter >= 3 first case survivors", [&] { return case_one_survivors(*d3); });
  run(5, "arithmetic eliminations", arithmetic_eliminations);
  run(6, "diameter 2 scan", diameter_two_scan);
  run(7, "symplectic cover on 51 vertices", cover_on_51);
  run(8, "randomised property tests", property_tests);
  run(9, "Chang graphs", chang_graphs);
  run(10, "exact vs double-precision local verdicts", [&] { return float_cross_check(corpus); });
  return internal_error ? 2 : 0;
}
