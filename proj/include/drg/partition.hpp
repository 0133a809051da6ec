#pragma once

#include "drg/graph.hpp"
#include "drg/spectral.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace drg {

struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  // throws unless the blocks are nonempty, disjoint and cover 0..n-1
  void validate(int n) const {
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition has an empty block");
      for (int v : b) {
        if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range: " + std::to_string(v));
        if (seen[static_cast<size_t>(v)]++) throw std::invalid_argument("vertex in two blocks: " + std::to_string(v));
      }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[static_cast<size_t>(v)]) throw std::invalid_argument("vertex not covered: " + std::to_string(v));
  }

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    return s;
  }
};

inline VertexPartition distance_partition(const Graph& g, int x) {
  auto d = distances_from(g, x);
  if (std::find(d.begin(), d.end(), -1) != d.end()) throw DisconnectedGraph(g);
  VertexPartition p;
  p.blocks.resize(static_cast<size_t>(*std::max_element(d.begin(), d.end())) + 1);
  for (int v = 0; v < g.order(); ++v) p.blocks[static_cast<size_t>(d[static_cast<size_t>(v)])].push_back(v);
  return p;
}

struct QuotientResult {
  RationalMatrix matrix;  // (i,j) = average number of P_j-neighbours of a vertex in P_i
  bool equitable;
};

inline QuotientResult quotient_matrix(const Graph& g, const VertexPartition& p) {
  p.validate(g.order());
  const int t = static_cast<int>(p.blocks.size());
  std::vector<Bitset> sets;
  for (const auto& b : p.blocks) {
    Bitset s(g.order());
    for (int v : b) s.set(v);
    sets.push_back(std::move(s));
  }
  QuotientResult r{RationalMatrix(t), true};
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      long total = 0;
      int first = -1;
      for (int v : p.blocks[static_cast<size_t>(i)]) {
        int c = g.neighbours(v).intersection_count(sets[static_cast<size_t>(j)]);
        total += c;
        if (first < 0) first = c;
        if (c != first) r.equitable = false;
      }
      r.matrix(i, j) = make_rational(total, static_cast<long>(p.blocks[static_cast<size_t>(i)].size()));
    }
  return r;
}

// eigenvalues repeated by multiplicity, descending
inline std::vector<RealAlgebraic> expanded_spectrum(const IntPoly& p) {
  std::vector<RealAlgebraic> out;
  for (const auto& e : real_spectrum(p))
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  return out;
}

struct InterlacingFailure {
  int index;  // 1-based i
  std::string detail;
};

// theta_{n-m+i}(A) <= eta_i <= theta_i(A) for the descending eigenvalues eta of B (size m)
inline std::optional<InterlacingFailure> interlacing_violation(const IntPoly& charA, const IntPoly& charB) {
  const int n = charA.degree();
  auto specA = real_spectrum(charA);
  auto eta = expanded_spectrum(charB);
  const int m = static_cast<int>(eta.size());
  if (m != charB.degree()) return InterlacingFailure{0, "quotient has non-real eigenvalues"};
  for (int i = 1; i <= m; ++i) {
    const RealAlgebraic& e = eta[static_cast<size_t>(i - 1)];
    int at_least = 0, greater = 0;
    for (const auto& a : specA) {
      int c = compare(a.value, e);
      if (c >= 0) at_least += a.multiplicity;
      if (c > 0) greater += a.multiplicity;
    }
    if (at_least < i) return InterlacingFailure{i, "eta_" + std::to_string(i) + " exceeds theta_" + std::to_string(i)};
    if (greater > n - m + i - 1)
      return InterlacingFailure{i, "eta_" + std::to_string(i) + " below theta_" + std::to_string(n - m + i)};
  }
  return std::nullopt;
}

inline bool check_interlacing(const Graph& g, const VertexPartition& p) {
  QuotientResult q = quotient_matrix(g, p);
  return !interlacing_violation(char_poly(g.adjacency_matrix()), char_poly(q.matrix)).has_value();
}

}  // namespace drg
