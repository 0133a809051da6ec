#pragma once

#include "drg/bitset.hpp"
#include "drg/matrix.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg {

// Simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(static_cast<size_t>(n), Bitset(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows_[static_cast<size_t>(u)].set(v);
    rows_[static_cast<size_t>(v)].set(u);
  }
  void remove_edge(int u, int v) {
    rows_[static_cast<size_t>(u)].reset(v);
    rows_[static_cast<size_t>(v)].reset(u);
  }

  bool adjacent(int u, int v) const { return rows_[static_cast<size_t>(u)].test(v); }
  const Bitset& neighbours(int u) const { return rows_[static_cast<size_t>(u)]; }
  std::vector<int> neighbour_list(int u) const { return neighbours(u).elements(); }
  int degree(int u) const { return rows_[static_cast<size_t>(u)].count(); }

  int edge_count() const {
    int s = 0;
    for (const auto& r : rows_) s += r.count();
    return s / 2;
  }

  // edges (u, v) with u < v, lexicographic
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < order(); ++u)
      neighbours(u).for_each([&](int v) {
        if (u < v) e.emplace_back(u, v);
      });
    return e;
  }

  std::optional<int> valency() const {
    if (rows_.empty()) return 0;
    int k = degree(0);
    for (int u = 1; u < order(); ++u)
      if (degree(u) != k) return std::nullopt;
    return k;
  }

  RationalMatrix adjacency_matrix() const {
    RationalMatrix m(order());
    for (int u = 0; u < order(); ++u) neighbours(u).for_each([&](int v) { m(u, v) = 1; });
    return m;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check(int u) const {
    if (u < 0 || u >= order()) throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  }

  std::vector<Bitset> rows_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// vertices = edges of g in lexicographic order
inline Graph line_graph(const Graph& g) {
  auto e = g.edges();
  if (e.empty()) throw std::invalid_argument("line graph of an edgeless graph");
  const int m = static_cast<int>(e.size());
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = e[static_cast<size_t>(i)];
      auto [c, d] = e[static_cast<size_t>(j)];
      if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
    }
  return h;
}

// induced on the given vertices, in the given order
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Graph local_graph(const Graph& g, int x) { return induced_subgraph(g, g.neighbour_list(x)); }

// BFS distances, -1 for unreachable
inline std::vector<int> distances_from(const Graph& g, int x) {
  std::vector<int> d(static_cast<size_t>(g.order()), -1);
  std::deque<int> q{x};
  d[static_cast<size_t>(x)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    g.neighbours(u).for_each([&](int v) {
      if (d[static_cast<size_t>(v)] < 0) {
        d[static_cast<size_t>(v)] = d[static_cast<size_t>(u)] + 1;
        q.push_back(v);
      }
    });
  }
  return d;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(g.order()), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    auto d = distances_from(g, s);
    std::vector<int> comp;
    for (int v = 0; v < g.order(); ++v)
      if (d[static_cast<size_t>(v)] >= 0) {
        comp.push_back(v);
        seen[static_cast<size_t>(v)] = true;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

class DisconnectedGraph : public std::invalid_argument {
 public:
  explicit DisconnectedGraph(const Graph& g) : std::invalid_argument(describe(g)) {}

 private:
  static std::string describe(const Graph& g) {
    std::string s = "graph is disconnected; components:";
    for (const auto& c : components(g)) {
      s += " {";
      for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      s += "}";
    }
    return s;
  }
};

inline int diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph(g);
  int D = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int d : distances_from(g, x)) D = std::max(D, d);
  return D;
}

// edges between S and its complement are toggled
inline Graph seidel_switch(const Graph& g, const std::vector<int>& S) {
  Bitset in(g.order());
  for (int v : S) in.set(v);
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool e = g.adjacent(u, v);
      if (in.test(u) != in.test(v)) e = !e;
      if (e) h.add_edge(u, v);
    }
  return h;
}

}  // namespace drg
