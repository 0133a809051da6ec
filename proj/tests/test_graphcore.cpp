#include "drg/coclique.hpp"
#include "drg/constructions.hpp"
#include "drg/drg_check.hpp"
#include "drg/graph.hpp"
#include "drg/graph_io.hpp"
#include "drg/isomorphism.hpp"
#include "drg/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace drg;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph relabelled(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  return h;
}

bool is_mapping(const Graph& a, const Graph& b, const std::vector<int>& m) {
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < a.order(); ++v)
      if (u != v && a.adjacent(u, v) != b.adjacent(m[static_cast<size_t>(u)], m[static_cast<size_t>(v)])) return false;
  return true;
}

// every permutation
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(static_cast<size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_mapping(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

int brute_coclique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST(Graph, BasicOperations) {
  Graph c = cycle_graph(6);
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.edge_count(), 6);
  EXPECT_EQ(c.valency(), 2);
  EXPECT_EQ(diameter(c), 3);
  EXPECT_EQ(complement(complement(c)), c);
  EXPECT_THROW(c.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(c.add_edge(0, 6), std::out_of_range);
  // L(K4) is the octahedron K_{3x2}
  EXPECT_TRUE(isomorphic(line_graph(complete_graph(4)), multipartite(3, 2)));
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(components(two).size(), 2u);
  EXPECT_THROW(diameter(two), DisconnectedGraph);
}

TEST(Graph, SeidelSwitchingOfT8GivesChangGraphs) {
  // switching w.r.t. an empty set changes nothing
  Graph t = triangular(8);
  EXPECT_EQ(seidel_switch(t, {}), t);
  for (int i = 1; i <= 3; ++i) {
    Graph g = chang(i);
    DRGCertificate c = check_drg(g);
    ASSERT_TRUE(c.distance_regular());
    EXPECT_EQ(c.array->str(), "{12,5;1,4}");
  }
}

TEST(Isomorphism, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937 rng(7);
  int iso = 0, non = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 4;  // 4..7
    Graph a = random_graph(rng, n, 0.45);
    Graph b;
    if (trial % 2 == 0) {
      std::vector<int> p(static_cast<size_t>(n));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      b = relabelled(a, p);
    } else {
      b = random_graph(rng, n, 0.45);
    }
    bool expected = brute_isomorphic(a, b);
    auto m = find_isomorphism(a, b);
    EXPECT_EQ(m.has_value(), expected) << "trial " << trial;
    if (m) EXPECT_TRUE(is_mapping(a, b, *m));
    (expected ? iso : non)++;
  }
  EXPECT_GT(iso, 20);
  EXPECT_GT(non, 5);
}

TEST(Isomorphism, RegularGraphsThatRefinementCannotSplit) {
  // same parameters, different graphs
  EXPECT_FALSE(isomorphic(shrikhande(), grid(4)));
  EXPECT_FALSE(isomorphic(chang(1), triangular(8)));
  EXPECT_TRUE(isomorphic(folded_cube(5), clebsch(5)));
  EXPECT_TRUE(isomorphic(kneser(5, 2), complement(triangular(5))));
  Graph big = complete_graph(65);
  EXPECT_THROW(find_isomorphism(big, big), BudgetExceeded);
}

TEST(Coclique, AgreesWithSubsetEnumeration) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 10, 0.15 + 0.02 * (trial % 20));
    EXPECT_EQ(max_coclique(g), brute_coclique(g)) << "trial " << trial;
    EXPECT_EQ(max_clique(g), brute_coclique(complement(g))) << "trial " << trial;
  }
  EXPECT_EQ(max_coclique(petersen()), 4);
  EXPECT_EQ(max_clique(complement(schlafli())), 3);
  EXPECT_THROW(max_coclique(complete_graph(121)), BudgetExceeded);
}

TEST(GraphIO, Graph6Vectors) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("A?").edge_count(), 0);
  Graph p = parse_graph6("IheA@GUAo");
  EXPECT_EQ(p.order(), 10);
  EXPECT_TRUE(isomorphic(p, petersen()));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_THROW(parse_graph6("I"), ParseError);
  EXPECT_THROW(parse_graph6("Bw?"), ParseError);
}

TEST(GraphIO, NativeRoundTripAndErrors) {
  Graph g = petersen();
  EXPECT_EQ(parse_native(to_native(g)), g);
  EXPECT_EQ(parse_native("# comment\nn 3\n0: 1 2\n1: 0\n2: 0\n"), Graph::from_edges(3, {{0, 1}, {0, 2}}));
  try {
    parse_native("n 2\n0: 1\n1:\n");
    FAIL() << "asymmetric input accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("asymmetric"), std::string::npos);
  }
  EXPECT_THROW(parse_native("n 2\n0: 5\n"), ParseError);
  EXPECT_THROW(parse_native("0: 1\n"), ParseError);
  EXPECT_THROW(parse_native("n 2\n0: 0\n"), ParseError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), FileError);
}

TEST(DRGCheck, CertifiesAndRejects) {
  EXPECT_EQ(check_drg(petersen()).array->str(), "{3,2;1,1}");
  Graph p = petersen();
  auto [u0, v0] = p.edges().front();
  p.remove_edge(u0, v0);
  DRGCertificate c = check_drg(p);
  EXPECT_FALSE(c.distance_regular());
  ASSERT_TRUE(c.violation);
  EXPECT_GE(c.violation->x, 0);
  DRGCertificate one = check_drg(complete_graph(1));
  ASSERT_TRUE(one.array);
  EXPECT_EQ(one.array->diameter(), 0);
  EXPECT_THROW(check_drg(Graph::from_edges(4, {{0, 1}, {2, 3}})), DisconnectedGraph);
  EXPECT_EQ(check_drg(cycle_graph(7)).array->str(), "{2,1,1;1,1,1}");
}

TEST(Partition, DistancePartitionIsEquitable) {
  Graph g = petersen();
  VertexPartition p = distance_partition(g, 0);
  EXPECT_EQ(p.sizes(), (std::vector<int>{1, 3, 6}));
  QuotientResult q = quotient_matrix(g, p);
  EXPECT_TRUE(q.equitable);
  EXPECT_EQ(q.matrix(1, 2), 2);
  EXPECT_EQ(q.matrix(2, 1), 1);
  EXPECT_TRUE(check_interlacing(g, p));
  VertexPartition bad{{{0, 1}, {1, 2}}};
  EXPECT_THROW(bad.validate(3), std::invalid_argument);
}
