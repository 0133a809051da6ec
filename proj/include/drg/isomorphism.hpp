#pragma once

#include "drg/coclique.hpp"
#include "drg/graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace drg {

inline constexpr int kIsomorphismBudget = 64;

namespace detail {

using Colouring = std::vector<int>;

// Relabel both colourings through one shared signature table so that equal
// signatures get equal colours in G and H.
inline bool relabel(const std::vector<std::vector<int>>& sg, const std::vector<std::vector<int>>& sh, Colouring& cg,
                    Colouring& ch) {
  std::map<std::vector<int>, int> ids;
  for (const auto& s : sg) ids.emplace(s, 0);
  for (const auto& s : sh) ids.emplace(s, 0);
  int next = 0;
  for (auto& [k, v] : ids) v = next++;
  std::vector<int> hg(static_cast<size_t>(next), 0), hh(static_cast<size_t>(next), 0);
  for (size_t i = 0; i < sg.size(); ++i) ++hg[static_cast<size_t>(cg[i] = ids[sg[i]])];
  for (size_t i = 0; i < sh.size(); ++i) ++hh[static_cast<size_t>(ch[i] = ids[sh[i]])];
  return hg == hh;
}

inline std::vector<int> neighbour_signature(const Graph& g, const Colouring& c, int v) {
  std::vector<int> s{c[static_cast<size_t>(v)]};
  g.neighbours(v).for_each([&](int u) { s.push_back(c[static_cast<size_t>(u)]); });
  std::sort(s.begin() + 1, s.end());
  return s;
}

inline int colour_count(const Colouring& c) {
  std::vector<int> s(c);
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

inline bool refine(const Graph& G, const Graph& H, Colouring& cg, Colouring& ch) {
  int classes = colour_count(cg);
  while (true) {
    std::vector<std::vector<int>> sg, sh;
    for (int v = 0; v < G.order(); ++v) sg.push_back(neighbour_signature(G, cg, v));
    for (int v = 0; v < H.order(); ++v) sh.push_back(neighbour_signature(H, ch, v));
    if (!relabel(sg, sh, cg, ch)) return false;
    int now = colour_count(cg);
    if (now == classes) return true;
    classes = now;
  }
}

inline std::vector<int> distance_profile(const Graph& g, int v) {
  auto d = distances_from(g, v);
  std::vector<int> prof{g.degree(v)};
  for (int x : d) {
    // unreachable vertices go in slot 1
    size_t slot = x < 0 ? 1 : static_cast<size_t>(x) + 2;
    if (prof.size() <= slot) prof.resize(slot + 1, 0);
    ++prof[slot];
  }
  return prof;
}

inline bool search(const Graph& G, const Graph& H, Colouring cg, Colouring ch, std::vector<int>& mapping) {
  if (!refine(G, H, cg, ch)) return false;
  const int n = G.order();
  std::map<int, int> size;
  for (int c : cg) ++size[c];
  int target = -1, best = n + 1;
  for (auto [c, s] : size)
    if (s > 1 && s < best) {
      best = s;
      target = c;
    }
  if (target < 0) {
    std::vector<int> inv(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) inv[static_cast<size_t>(ch[static_cast<size_t>(w)])] = w;
    mapping.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) mapping[static_cast<size_t>(v)] = inv[static_cast<size_t>(cg[static_cast<size_t>(v)])];
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (G.adjacent(u, v) != H.adjacent(mapping[static_cast<size_t>(u)], mapping[static_cast<size_t>(v)]))
          return false;
    return true;
  }
  int v = static_cast<int>(std::find(cg.begin(), cg.end(), target) - cg.begin());
  const int fresh = *std::max_element(cg.begin(), cg.end()) + 1;
  for (int w = 0; w < n; ++w) {
    if (ch[static_cast<size_t>(w)] != target) continue;
    Colouring cg2 = cg, ch2 = ch;
    cg2[static_cast<size_t>(v)] = fresh;
    ch2[static_cast<size_t>(w)] = fresh;
    if (search(G, H, std::move(cg2), std::move(ch2), mapping)) return true;
  }
  return false;
}

}  // namespace detail

// mapping[v] = image of v in H
inline std::optional<std::vector<int>> find_isomorphism(const Graph& G, const Graph& H) {
  if (G.order() > kIsomorphismBudget || H.order() > kIsomorphismBudget)
    throw BudgetExceeded("isomorphism budget exceeded (more than 64 vertices)");
  if (G.order() != H.order() || G.edge_count() != H.edge_count()) return std::nullopt;
  std::vector<std::vector<int>> sg, sh;
  for (int v = 0; v < G.order(); ++v) sg.push_back(detail::distance_profile(G, v));
  for (int v = 0; v < H.order(); ++v) sh.push_back(detail::distance_profile(H, v));
  detail::Colouring cg(static_cast<size_t>(G.order())), ch(static_cast<size_t>(H.order()));
  if (!detail::relabel(sg, sh, cg, ch)) return std::nullopt;
  std::vector<int> mapping;
  if (!detail::search(G, H, cg, ch, mapping)) return std::nullopt;
  return mapping;
}

inline bool isomorphic(const Graph& G, const Graph& H) { return find_isomorphism(G, H).has_value(); }

}  // namespace drg
