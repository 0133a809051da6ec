#pragma once

#include "drg/constructions.hpp"
#include "drg/parallel.hpp"

#include <string>
#include <vector>

namespace drg {

// Distance-regular test corpus: everything the verification suites build, plus a few
// neighbours (cycles, grids, Johnson and halved cubes) that exercise the filters from the outside.
inline const std::vector<std::string>& corpus_families() {
  static const std::vector<std::string> c{
      "complete:4",        "complete:7",        "cycle:6",           "cycle:7",
      "petersen",          "co-petersen",       "multipartite:4,2",  "multipartite:5,3",
      "multipartite:3,3",  "grid:4",            "grid-complement:4", "grid-complement:5",
      "triangular:6",      "co-triangular:5",   "co-triangular:6",   "co-triangular:7",
      "co-triangular:8",   "shrikhande",        "co-shrikhande",     "clebsch:5",
      "clebsch:10",        "folded-cube:5",     "paley:9",           "paley:13",
      "paley:17",          "chang:1",           "chang:2",           "chang:3",
      "co-chang:1",        "co-chang:2",        "co-chang:3",        "schlafli",
      "co-schlafli",       "johnson:6,3",       "johnson:7,3",       "halved-cube:6",
      "halved-cube-distance-2:6", "icosahedron", "symplectic-cover:4,3,1", "symplectic-cover:5,2,1",
      "symplectic-cover:16,3,1",  "gosset",    "doro",              "conway-smith",
  };
  return c;
}

struct CorpusGraph {
  std::string family;
  Graph graph;
};

inline std::vector<CorpusGraph> build_corpus() {
  return parallel_map(corpus_families(), [](const std::string& f) { return CorpusGraph{f, build(f)}; });
}

}  // namespace drg
