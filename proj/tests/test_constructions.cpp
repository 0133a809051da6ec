#include "drg/constructions.hpp"
#include "drg/finite_field.hpp"
#include "drg/verify.hpp"

#include <gtest/gtest.h>

using namespace drg;

namespace {

std::string certified(const Graph& g) {
  DRGCertificate c = check_drg(g);
  return c.array ? c.array->str() : "not distance-regular";
}

}  // namespace

TEST(FiniteField, GF16) {
  FiniteField f(16);
  EXPECT_EQ(f.modulus(), (std::vector<int>{1, 1, 0, 0, 1}));  // x^4 + x + 1
  EXPECT_EQ(f.generator(), 2);                                // x itself
  EXPECT_EQ(f.mul(8, 2), 3);                                  // x^4 = x + 1
  EXPECT_EQ(f.add(5, 5), 0);
  for (int a = 1; a < 16; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
  EXPECT_EQ(f.subgroup_of_index(3).size(), 5u);
  EXPECT_THROW(FiniteField(12), std::invalid_argument);
}

TEST(FiniteField, PrimeFieldsAndSquares) {
  FiniteField f(13);
  int squares = 0;
  for (int a = 1; a < 13; ++a) squares += f.is_square(a);
  EXPECT_EQ(squares, 6);
  EXPECT_TRUE(f.is_square(f.neg(1)));  // 13 = 1 mod 4
  EXPECT_EQ(prime_power(49), (std::pair<int, int>{7, 2}));
  EXPECT_FALSE(prime_power(18));
}

TEST(Families, CertifiedArraysMatchFormulas) {
  for (const std::string f : {"complete:5", "multipartite:4,2", "multipartite:5,3", "grid:4", "grid-complement:5", "triangular:7",
                              "co-triangular:8", "petersen", "co-petersen", "shrikhande", "co-shrikhande", "clebsch:5", "clebsch:10",
                              "folded-cube:5", "paley:9", "paley:13", "paley:17", "chang:2", "co-chang:3", "schlafli", "johnson:6,3",
                              "johnson:7,3", "icosahedron", "halved-cube-distance-2:6", "symplectic-cover:16,3,1",
                              "symplectic-cover:5,2,1", "gosset", "doro", "conway-smith"}) {
    auto expected = formula_array(f);
    ASSERT_TRUE(expected) << f;
    EXPECT_EQ(certified(build(f)), expected->str()) << f;
  }
}

TEST(Families, SpecificInstances) {
  EXPECT_EQ(build("symplectic-cover:16,3,1").order(), 51);
  EXPECT_EQ(certified(build("symplectic-cover:4,3,1")), "{4,2,1;1,1,4}");
  EXPECT_EQ(build("symplectic-cover:4,3,1").order(), 15);
  EXPECT_EQ(certified(halved_cube(6)), "{15,6,1;1,6,15}");
  EXPECT_EQ(certified(folded_cube(5)), "{5,4;1,2}");
  EXPECT_EQ(certified(build("co-schlafli")), "{10,8;1,5}");
  EXPECT_EQ(build("conway-smith").order(), 63);
  EXPECT_EQ(build("doro").order(), 65);
}

TEST(Families, CoordinateIcosahedronMatchesSymplecticCover) {
  EXPECT_TRUE(isomorphic(icosahedron(), symplectic_cover(5, 2, 1)));
}

TEST(Families, ChangGraphs) {
  std::vector<Graph> c{chang(1), chang(2), chang(3)};
  Graph t8 = triangular(8);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(certified(c[static_cast<size_t>(i)]), "{12,5;1,4}");
    EXPECT_FALSE(isomorphic(c[static_cast<size_t>(i)], t8));
    for (int j = i + 1; j < 3; ++j) EXPECT_FALSE(isomorphic(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]));
  }
}

TEST(Families, FoldedCubeAndClebsch) {
  EXPECT_TRUE(isomorphic(folded_cube(5), clebsch(5)));
  EXPECT_EQ(complement(clebsch(5)), clebsch(10));
}

TEST(Families, SymplecticCoverIndependentOfCoset) {
  FiniteField f(16);
  int g = f.generator();
  Graph base = symplectic_cover(16, 3, 1);
  EXPECT_TRUE(isomorphic(base, symplectic_cover(16, 3, g)));
  EXPECT_TRUE(isomorphic(base, symplectic_cover(16, 3, f.mul(g, g))));
}

TEST(Families, SymplecticContract) {
  EXPECT_THROW(symplectic_cover(12, 11, 1), InvalidFamily);
  EXPECT_THROW(symplectic_cover(7, 2, 1), InvalidFamily);  // m = 3 odd, q odd
  EXPECT_THROW(symplectic_cover(16, 3, 0), InvalidFamily);
  try {
    symplectic_cover(10, 3, 1);
    FAIL();
  } catch (const InvalidFamily& e) {
    EXPECT_NE(std::string(e.what()).find("q = rm + 1"), std::string::npos);
  }
}

TEST(Families, DistanceGraphsAndLocality) {
  EXPECT_EQ(distance_k_graph(petersen(), 1), petersen());
  Graph m = distance_k_graph(cycle_graph(6), 3);
  EXPECT_EQ(m.edge_count(), 3);
  EXPECT_EQ(m.valency(), 1);
  EXPECT_THROW(distance_k_graph(cycle_graph(6), 4), std::invalid_argument);
  EXPECT_TRUE(is_locally(shrikhande(), cycle_graph(6)));
  EXPECT_FALSE(is_locally(petersen(), complete_graph(3)));
  EXPECT_TRUE(is_locally(build("symplectic-cover:16,3,1"), folded_cube(5)));
}

TEST(Families, SpecParsing) {
  FamilySpec s = FamilySpec::parse("co-chang:2");
  EXPECT_TRUE(s.complemented);
  EXPECT_EQ(s.name, "chang");
  EXPECT_EQ(s.params, std::vector<int>{2});
  EXPECT_EQ(FamilySpec::parse("symplectic-cover:16,3,1").str(), "symplectic-cover:16,3,1");
  EXPECT_THROW(FamilySpec::parse("paley:x"), InvalidFamily);
  EXPECT_THROW(build("nope"), InvalidFamily);
  EXPECT_THROW(build("paley:15"), InvalidFamily);
  EXPECT_THROW(build("paley"), InvalidFamily);
  EXPECT_THROW(build("chang:4"), InvalidFamily);
  EXPECT_THROW(build("multipartite:100,100"), InvalidFamily);
}

TEST(Families, SubsetsAreLexicographic) {
  auto s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (std::vector<int>{0, 1}));
  EXPECT_EQ(s[1], (std::vector<int>{0, 2}));
  EXPECT_EQ(s.back(), (std::vector<int>{2, 3}));
}

TEST(Assets, CorruptedAssetIsRejected) {
  EXPECT_NO_THROW(load_named_asset("doro"));
  EXPECT_THROW(load_named_asset("missing"), std::invalid_argument);
  NamedGraphEntry e = named_assets()[1];
  std::string wrong = to_native(complete_graph(65));
  e.text = wrong.c_str();
  EXPECT_THROW(certify_asset(e), AssetCertificationError);
  std::string small = to_native(petersen());
  e.text = small.c_str();
  EXPECT_THROW(certify_asset(e), AssetCertificationError);
  e.text = "n 65\n0: 999\n";
  EXPECT_THROW(certify_asset(e), AssetCertificationError);
  // right graph, wrong expectation
  NamedGraphEntry f = named_assets()[0];
  f.expected = IntersectionArray::parse("{10,6,4,1;1,2,6,9}");
  EXPECT_THROW(certify_asset(f), AssetCertificationError);
}
