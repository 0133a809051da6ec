#include "drg/array_spectrum.hpp"
#include "drg/feasibility.hpp"
#include "drg/imported_facts.hpp"
#include "drg/intersection_array.hpp"

#include <gtest/gtest.h>

using namespace drg;

namespace {

IntersectionArray A(const char* s) { return IntersectionArray::parse(s); }

std::vector<std::string> spectrum_strings(const IntersectionArray& a) {
  std::vector<std::string> out;
  for (const auto& e : spectrum(a).eigenvalues) out.push_back(e.display.to_string() + "^" + (e.multiplicity ? to_string(*e.multiplicity) : "?"));
  return out;
}

}  // namespace

TEST(IntersectionArray, ParseAndDerive) {
  IntersectionArray a = A("{ 27, 16, 1 ; 1, 16, 27 }");
  EXPECT_EQ(a.str(), "{27,16,1;1,16,27}");
  EXPECT_EQ(a.diameter(), 3);
  EXPECT_EQ(a.k(), 27);
  EXPECT_EQ(a.a_at(1), 10);
  DRGParams p = derive(a);
  EXPECT_EQ(p.nu, 56);
  EXPECT_EQ(p.ki[2], 27);
  EXPECT_TRUE(p.ki_integral);
  EXPECT_THROW(A("{1,2;3"), ArrayParseError);
  EXPECT_THROW(A("{1,2;3}"), ArrayParseError);
  EXPECT_THROW(A("{a;1}"), ArrayParseError);
  EXPECT_THROW(A("27,16;1,16"), ArrayParseError);
}

TEST(ArraySpectrum, KnownSpectra) {
  EXPECT_EQ(spectrum_strings(A("{27,16,1;1,16,27}")), (std::vector<std::string>{"27^1", "3^21", "-1^27", "-9^7"}));
  EXPECT_EQ(spectrum_strings(A("{3,2;1,1}")), (std::vector<std::string>{"3^1", "1^5", "-2^4"}));
  EXPECT_EQ(spectrum_strings(A("{10,6,4,1;1,2,6,10}")), (std::vector<std::string>{"10^1", "5^12", "1^14", "-2^30", "-4^6"}));
  EXPECT_EQ(spectrum_strings(A("{6,3;1,3}")), (std::vector<std::string>{"6^1", "(-1 + sqrt(13))/2^6", "(-1 - sqrt(13))/2^6"}));
  EXPECT_EQ(spectrum_strings(A("{5,2,1;1,2,5}")), (std::vector<std::string>{"5^1", "sqrt(5)^3", "-1^5", "-sqrt(5)^3"}));
  EXPECT_THROW(spectrum(A("{14,6;1,8}")), InfeasibleArray);
}

TEST(ArraySpectrum, NonIntegralMultiplicitiesAreReportedExactly) {
  SpectrumEstimate s = spectrum(A("{21,12,1;1,4,21}"));
  ASSERT_EQ(s.eigenvalues.size(), 4u);
  EXPECT_EQ(*s.eigenvalues[1].multiplicity, Rational(99, 5));
  EXPECT_FALSE(s.multiplicities_positive_integers());
}

TEST(Feasibility, FilterVerdicts) {
  FeasibilityReport r = feasibility(A("{21,12,1;1,4,21}"), {});
  EXPECT_EQ(r.verdict(), "infeasible");
  EXPECT_EQ(r.primary_failure()->id, "F3");
  EXPECT_EQ(r.filter("F4").verdict, Verdict::inapplicable);

  FeasibilityReport e = feasibility(A("{28,12,1;1,6,28}"), {true});
  EXPECT_EQ(e.primary_failure()->id, "F7");

  FeasibilityReport g = feasibility(A("{27,16,1;1,16,27}"), {true});
  EXPECT_TRUE(g.surviving());
  EXPECT_TRUE(g.shape.taylor);

  FeasibilityReport m = feasibility(A("{3,3;1,1}"), {});
  ASSERT_TRUE(m.primary_failure());
  EXPECT_EQ(m.primary_failure()->id, "F1");
  EXPECT_TRUE(feasibility(A("{3,2;1,3}"), {}).surviving());  // K_{3,3}

  FeasibilityReport k = feasibility(A("{14,6;1,8}"), {});
  EXPECT_EQ(k.primary_failure()->id, "F2");

  // conference arrays pass the integrality filter with irrational eigenvalues
  FeasibilityReport c = feasibility(A("{10,5;1,5}"), {});
  EXPECT_TRUE(c.surviving());
  EXPECT_TRUE(c.shape.conference);
  ASSERT_TRUE(c.literature);
  EXPECT_EQ(c.literature->id, "conference-21");

  // Terwilliger chain with the quadrangle assumption: c2 >= a1 + 4 - b1 fails here
  FeasibilityReport t = feasibility(A("{6,3,1;1,1,6}"), {true});
  EXPECT_EQ(t.filter("F4").verdict, Verdict::fail);
}

TEST(Feasibility, ShapeClassification) {
  ShapeTags s = classify_shape(A("{16,10,1;1,5,16}"));
  ASSERT_TRUE(s.antipodal_cover);
  EXPECT_EQ((*s.antipodal_cover)[2], 3);
  EXPECT_TRUE(classify_shape(A("{6,1;1,6}")).complete_multipartite);
  EXPECT_TRUE(classify_shape(A("{4,3,2,1;1,2,3,4}")).bipartite);
}

TEST(SRGParams, FromEigenvaluesAndRatioBound) {
  SRGParams p = srg_from_eigs(28, 3, -4);
  EXPECT_EQ(p.str(), "(50,28,15,16)");
  // k = 5, theta = 0, -5 is K_{5,5}
  EXPECT_EQ(srg_from_eigs(5, 0, -5).str(), "(10,5,0,5)");
  EXPECT_THROW(srg_from_eigs(12, 2, -13), InconsistentParameters);
  EXPECT_THROW(srg_from_eigs(3, 4, 1), InconsistentParameters);
  // Petersen: coclique 4 meets the ratio bound at theta1 = 1
  EXPECT_EQ(coclique_ratio_bound(srg_params(A("{3,2;1,1}")), 4), Rational(1));
}

TEST(ImportedFacts, TableLookup) {
  auto f = imported_fact_for(A("{24,10;1,12}"));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->id, "srg-24-10-1-12");
  EXPECT_FALSE(imported_fact_for(A("{12,6;1,6}")));
  EXPECT_EQ(imported_fact("primitive-excluded").id, "primitive-excluded");
  EXPECT_THROW(imported_fact("no-such-fact"), std::out_of_range);
}
