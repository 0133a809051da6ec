#pragma once

#include "drg/intersection_array.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drg {

// Literature facts taken on trust.  Never merged into arithmetic verdicts;
// scans cite them by id when nothing machine-checked applies.
struct ImportedFact {
  std::string id;
  std::optional<IntersectionArray> array;  // set for nonexistence facts keyed by array
  std::string claim;
  std::string citation;
};

inline const std::vector<ImportedFact>& imported_facts() {
  static const std::vector<ImportedFact> facts = [] {
    auto A = [](const char* s) { return std::optional<IntersectionArray>(IntersectionArray::parse(s)); };
    const std::string covers = "published table of antipodal distance-regular covers of complete graphs, Table 1";
    const std::string bcn14 = "Brouwer, Cohen, Neumaier, Distance-Regular Graphs (1989), Chapter 14 tables";
    return std::vector<ImportedFact>{
        {"cover-10-6-1-1-2-10", A("{10,6,1;1,2,10}"), "no distance-regular graph with this array", covers},
        {"cover-10-6-1-1-3-10", A("{10,6,1;1,3,10}"), "no distance-regular graph with this array", covers},
        {"cover-12-6-1-1-3-12", A("{12,6,1;1,3,12}"), "no distance-regular graph with this array", covers},
        {"cover-15-8-1-1-4-15", A("{15,8,1;1,4,15}"), "no distance-regular graph with this array", covers},
        {"srg-24-10-1-12", A("{24,10;1,12}"), "no strongly regular graph with these parameters",
         "Brouwer, tables of strongly regular graph parameters"},
        {"locally-petersen-26", A("{10,6;1,4}"),
         "a graph with this array is locally Petersen; no locally Petersen graph has 26 vertices",
         "J.I. Hall, Locally Petersen graphs, J. Graph Theory 4 (1980)"},
        {"conference-21", A("{10,5;1,5}"), "no conference graph on 21 vertices",
         "conference graphs need v a sum of two squares (van Lint, Seidel); Brouwer SRG tables"},
        {"primitive-excluded", std::nullopt,
         "no primitive distance-regular graph with diameter >= 3 fits the remaining valency/vertex bounds, so a "
         "non-Taylor candidate is an antipodal r-cover of diameter 3 with r >= 3",
         bcn14},
        {"terwilliger-equality", std::nullopt,
         "equality in the Terwilliger diameter bound forces the graph to be a Johnson, Hamming or halved cube graph",
         "Brouwer, Cohen, Neumaier, Distance-Regular Graphs (1989), Theorem 5.2.3"},
        {"cover-eigenvalues-integral", std::nullopt,
         "an antipodal cover of a complete graph with a1 != c2 has integral eigenvalues",
         "Brouwer, Cohen, Neumaier, Distance-Regular Graphs (1989), p. 431"},
        {"valency-28-local-structure", std::nullopt,
         "for {28,12;1,16} under the local hypothesis the local graph is the complement of a Chang graph or of T(8)",
         "argument via the classification of graphs with smallest eigenvalue -2 (Brouwer, Cohen, Neumaier, Prop. "
         "3.12.2)"},
    };
  }();
  return facts;
}

inline std::optional<ImportedFact> imported_fact_for(const IntersectionArray& arr) {
  for (const auto& f : imported_facts())
    if (f.array && *f.array == arr) return f;
  return std::nullopt;
}

inline const ImportedFact& imported_fact(const std::string& id) {
  for (const auto& f : imported_facts())
    if (f.id == id) return f;
  throw std::out_of_range("no imported fact " + id);
}

}  // namespace drg
