#include "drg/parallel.hpp"
#include "drg/properties.hpp"
#include "drg/report.hpp"
#include "drg/scans.hpp"
#include "drg/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace drg;

namespace {

IntersectionArray A(const char* s) { return IntersectionArray::parse(s); }

std::set<std::string> strs(const std::vector<IntersectionArray>& v) {
  std::set<std::string> s;
  for (const auto& a : v) s.insert(a.str());
  return s;
}

}  // namespace

TEST(LocalProperty, ShrikhandeHasLocalSecondEigenvalueOne) {
  LocalSpectrumSummary s = local_property(shrikhande(), 1);
  ASSERT_EQ(s.vertices.size(), 16u);
  EXPECT_TRUE(s.all_pass());
  for (const auto& v : s.vertices) {
    ASSERT_TRUE(v.theta1);
    EXPECT_EQ(v.theta1->to_string(), "1");
    EXPECT_EQ(v.m_x, 2);  // C6 has eigenvalue 1 twice
  }
}

TEST(LocalProperty, ThresholdIsRespected) {
  EXPECT_TRUE(local_property(petersen(), 0).all_pass());
  EXPECT_TRUE(local_property(gosset(), 1).all_pass());
  // icosahedron: local C5 has theta1 = (sqrt 5 - 1)/2 ~ 0.618
  EXPECT_FALSE(local_property(icosahedron(), Rational(1, 2)).all_pass());
  EXPECT_TRUE(local_property(icosahedron(), Rational(5, 8)).all_pass());
  // halved 6-cube has local graph T(6) minus nothing: theta1 = 2
  LocalSpectrumSummary h = local_property(halved_cube(6), 1);
  EXPECT_FALSE(h.all_pass());
  EXPECT_EQ(h.first_failure(), 0);
  EXPECT_FALSE(local_property(Graph::from_edges(3, {{0, 1}, {1, 2}}), 1).regular);
}

TEST(Connectivity, Flags) {
  for (auto [a, b] : connectivity_props(multipartite(4, 2))) {
    EXPECT_TRUE(a);
    EXPECT_FALSE(b);
  }
  for (auto [a, b] : connectivity_props(icosahedron())) {
    EXPECT_TRUE(a);
    EXPECT_TRUE(b);
  }
  for (auto [a, b] : connectivity_props(shrikhande())) {
    EXPECT_TRUE(a);
    EXPECT_TRUE(b);
  }
}

TEST(Sandwich, HoldsOnDiameterThreeGraphs) {
  EXPECT_TRUE(theorem_2_10_sandwich(icosahedron()).holds);
  SandwichResult g = theorem_2_10_sandwich(gosset());
  EXPECT_TRUE(g.holds);
  EXPECT_EQ(g.lower.to_string(), "-5");
  EXPECT_EQ(g.upper.to_string(), "1");
  EXPECT_THROW(theorem_2_10_sandwich(petersen()), std::invalid_argument);
}

TEST(PartitionBound, CompleteGraphAndHypothesis) {
  PartitionBoundResult r = partition_bound(complete_graph(4), {0});
  EXPECT_EQ(r.alpha, 3);
  EXPECT_EQ(r.bound, Rational(3, 2));
  EXPECT_TRUE(r.consistent());
  EXPECT_THROW(partition_bound(shrikhande(), {0}), LemmaInapplicable);
  EXPECT_THROW(partition_bound(Graph::from_edges(3, {{0, 1}, {1, 2}}), {0}), LemmaInapplicable);
  EXPECT_THROW(partition_bound(complete_graph(4), {}), std::invalid_argument);
}

TEST(PartitionBound, LocalFormForValency28) {
  LocalPartitionBound b = local_partition_bound(srg_params(A("{28,12;1,16}")), 10);
  EXPECT_EQ(b.bound, 6);
  EXPECT_EQ(b.alpha, 5);
  EXPECT_TRUE(b.contradiction);
  LocalPartitionBound c = local_partition_bound(srg_params(A("{45,16;1,24}")), 21);
  EXPECT_EQ(c.bound, Rational(63, 5));
  EXPECT_TRUE(c.contradiction);
}

TEST(InducedSubgraphs, DiamondsAndQuadrangles) {
  EXPECT_FALSE(has_induced_k211(complement(schlafli())));
  EXPECT_TRUE(has_induced_k211(schlafli()));
  EXPECT_FALSE(find_induced_quadrangle(complete_graph(5)));
  EXPECT_TRUE(find_induced_quadrangle(cycle_graph(4)));
  EXPECT_FALSE(terwilliger_check(icosahedron()));
  auto j = terwilliger_check(johnson(6, 3));
  ASSERT_TRUE(j);
  EXPECT_TRUE(j->surviving());
}

TEST(Scans, DiameterThreeCaseOneSurvivors) {
  ScanResult r = scan_diameter3plus();
  std::set<std::string> got;
  for (const auto* e : r.get("diam3-case1").surviving("parameters")) got.insert(e->params);
  EXPECT_EQ(got, (std::set<std::string>{"t=4, alpha=1", "t=5, alpha=1", "t=6, alpha=1", "t=4, alpha=2"}));
  // every enumerated cover is eliminated, none silently
  for (const auto& e : r.get("diam3-case1").entries)
    if (e.stage == "cover") {
      EXPECT_NE(e.fate, Fate::surviving);
      EXPECT_TRUE(e.fact.has_value()) << e.array->str();
    }
}

TEST(Scans, DiameterThreeFinalStage) {
  ScanResult r = scan_diameter3plus();
  const ScanCase& f = r.get("diam3-final");
  ASSERT_EQ(f.entries.size(), 3u);
  const ScanEntry* s = f.find(A("{16,10,1;1,5,16}"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->fate, Fate::surviving);
  EXPECT_EQ(s->witness_graph, "symplectic-cover:16,3,1");
  EXPECT_EQ(f.find(A("{27,16,1;1,4,27}"))->fate, Fate::eliminated_prose);
  EXPECT_EQ(f.find(A("{24,14,1;1,7,24}"))->fate, Fate::eliminated_prose);
  EXPECT_NE(r.get("diam3-case3").find(A("{28,12,1;1,6,28}"))->filter.find("F7"), std::string::npos);
  EXPECT_NE(r.get("diam3-case4").find(A("{21,12,1;1,4,21}"))->filter.find("F3"), std::string::npos);
}

TEST(Scans, DiameterTwoClaimAndSurvivors) {
  ScanResult r = scan_diameter2();
  std::vector<ScanCase> cases(r.cases.begin(), r.cases.end() - 1);
  EXPECT_EQ(strs(claim_arrays(cases)),
            (std::set<std::string>{"{45,16;1,24}", "{28,12;1,16}", "{27,16;1,6}", "{27,16;1,12}", "{24,14;1,6}", "{21,12;1,6}",
                                   "{21,12;1,9}", "{18,10;1,6}", "{15,8;1,6}", "{12,6;1,6}"}));
  EXPECT_EQ(strs(r.get("diam2-final").surviving_arrays()),
            (std::set<std::string>{"{12,6;1,6}", "{15,8;1,6}", "{18,10;1,6}", "{21,12;1,6}", "{21,12;1,9}", "{27,16;1,12}"}));
  EXPECT_EQ(r.get("diam2-case3").find(A("{24,10;1,12}"))->fact, "srg-24-10-1-12");
}

TEST(Scans, EveryEntryIsAccountedFor) {
  for (const ScanResult& r : {scan_diameter2(), scan_diameter3plus()})
    for (const auto& c : r.cases)
      for (const auto& e : c.entries) {
        if (e.fate == Fate::surviving) {
          EXPECT_TRUE(e.filter.empty());
        } else {
          EXPECT_FALSE(e.filter.empty()) << c.id << " " << e.params;
          EXPECT_FALSE(e.witness.empty()) << c.id << " " << e.params;
        }
      }
}

TEST(Scans, DeterministicAcrossThreadCounts) {
  setenv("DRG_THREADS", "1", 1);
  std::string a = report::scan_json(scan_diameter2()).dump() + report::verification_json("x", verify_theorem_1_1()).dump();
  setenv("DRG_THREADS", "4", 1);
  std::string b = report::scan_json(scan_diameter2()).dump() + report::verification_json("x", verify_theorem_1_1()).dump();
  unsetenv("DRG_THREADS");
  EXPECT_EQ(a, b);
}

TEST(Parallel, OrderAndErrors) {
  setenv("DRG_THREADS", "3", 1);
  std::vector<int> v(100);
  for (int i = 0; i < 100; ++i) v[static_cast<size_t>(i)] = i;
  auto sq = parallel_map(v, [](int x) { return x * x; });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sq[static_cast<size_t>(i)], i * i);
  try {
    parallel_map(v, [](int x) -> int {
      if (x == 17 || x == 60) throw std::runtime_error(std::to_string(x));
      return x;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
  unsetenv("DRG_THREADS");
}

TEST(Verification, OpenArraysAreReportedOpen) {
  auto rs = verify_theorem_1_2();
  int open = 0;
  for (const auto& r : rs)
    if (r.status == Status::open) ++open;
  EXPECT_EQ(open, 6);
}

TEST(Verification, FormulaMismatchAborts) {
  EXPECT_THROW(certified_build("petersen as something else", "petersen:1"), InvalidFamily);
  EXPECT_NO_THROW(certified_build("J(6,3)", "johnson:6,3"));
}
