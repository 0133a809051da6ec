#pragma once

#include "drg/assets.hpp"
#include "drg/drg_check.hpp"
#include "drg/finite_field.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Pred>
Graph graph_from_predicate(int n, Pred&& adjacent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adjacent(u, v)) g.add_edge(u, v);
  return g;
}

// k-subsets of {0..n-1} in lexicographic order
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++s;
  return s;
}

// ---- families ----------------------------------------------------------------

inline Graph multipartite(int n, int t) {
  if (n < 1 || t < 1 || n * t > 300) throw InvalidFamily("multipartite: need n, t >= 1 and n t <= 300");
  return graph_from_predicate(n * t, [&](int u, int v) { return u / t != v / t; });
}

inline Graph johnson(int n, int k) {
  if (k < 1 || n < 2 * k) throw InvalidFamily("johnson: need 1 <= k <= n/2");
  auto s = subsets(n, k);
  return graph_from_predicate(static_cast<int>(s.size()), [&](int u, int v) {
    return intersection_size(s[static_cast<size_t>(u)], s[static_cast<size_t>(v)]) == k - 1;
  });
}

inline Graph triangular(int n) {
  if (n < 4) throw InvalidFamily("triangular: need n >= 4");
  return johnson(n, 2);
}

inline Graph kneser(int n, int k) {
  auto s = subsets(n, k);
  return graph_from_predicate(static_cast<int>(s.size()), [&](int u, int v) {
    return intersection_size(s[static_cast<size_t>(u)], s[static_cast<size_t>(v)]) == 0;
  });
}

inline Graph petersen() { return kneser(5, 2); }

// n x n rook's graph, vertex (i, j) = i n + j
inline Graph grid(int n) {
  if (n < 2) throw InvalidFamily("grid: need n >= 2");
  return graph_from_predicate(n * n, [&](int u, int v) { return u / n == v / n || u % n == v % n; });
}

inline Graph paley(int q) {
  auto pe = prime_power(q);
  if (!pe || q % 4 != 1) throw InvalidFamily("paley: q must be a prime power with q = 1 mod 4, got " + std::to_string(q));
  FiniteField f(q);
  return graph_from_predicate(q, [&](int u, int v) { return f.is_square(f.sub(u, v)); });
}

inline int popcount(unsigned x) { return __builtin_popcount(x); }

// even-weight binary n-vectors, adjacent at Hamming distance 2
inline Graph halved_cube(int n) {
  if (n < 2 || n > 16) throw InvalidFamily("halved-cube: need 2 <= n <= 16");
  std::vector<unsigned> v;
  for (unsigned x = 0; x < (1u << n); ++x)
    if (popcount(x) % 2 == 0) v.push_back(x);
  return graph_from_predicate(static_cast<int>(v.size()),
                              [&](int a, int b) { return popcount(v[static_cast<size_t>(a)] ^ v[static_cast<size_t>(b)]) == 2; });
}

// binary (n-1)-vectors, adjacent when they differ in one coordinate or in all
inline Graph folded_cube(int n) {
  if (n < 3 || n > 16) throw InvalidFamily("folded-cube: need 3 <= n <= 16");
  const unsigned all = (1u << (n - 1)) - 1;
  return graph_from_predicate(1 << (n - 1), [&](int a, int b) {
    unsigned d = static_cast<unsigned>(a ^ b);
    return popcount(d) == 1 || d == all;
  });
}

inline Graph shrikhande() {
  // Cayley graph on Z4^2 with connection set {+-(1,0), +-(0,1), +-(1,1)}
  return graph_from_predicate(16, [](int u, int v) {
    int dx = ((u / 4 - v / 4) % 4 + 4) % 4, dy = ((u % 4 - v % 4) % 4 + 4) % 4;
    auto pm = [](int a) { return a == 1 || a == 3; };
    return (pm(dx) && dy == 0) || (dx == 0 && pm(dy)) || (dx == dy && pm(dx));
  });
}

// 10-regular Clebsch graph = halved 5-cube; the 5-regular one is its complement
inline Graph clebsch(int valency) {
  if (valency == 10) return halved_cube(5);
  if (valency == 5) return complement(halved_cube(5));
  throw InvalidFamily("clebsch: valency must be 5 or 10");
}

// elements a + b*phi of Z[phi], phi^2 = phi + 1
struct ZPhi {
  long a = 0, b = 0;
  ZPhi operator+(ZPhi o) const { return {a + o.a, b + o.b}; }
  ZPhi operator-(ZPhi o) const { return {a - o.a, b - o.b}; }
  ZPhi operator*(ZPhi o) const { return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b}; }
  bool operator==(const ZPhi&) const = default;
};

// cyclic permutations of (0, +-1, +-phi); adjacent at squared distance 4
inline Graph icosahedron() {
  std::vector<std::array<ZPhi, 3>> pts;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      std::array<ZPhi, 3> base{ZPhi{0, 0}, ZPhi{s1, 0}, ZPhi{0, s2}};
      for (int r = 0; r < 3; ++r) pts.push_back({base[static_cast<size_t>(r % 3)], base[static_cast<size_t>((r + 1) % 3)],
                                                  base[static_cast<size_t>((r + 2) % 3)]});
    }
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    for (size_t i = 0; i < 3; ++i) {
      if (x[i].b != y[i].b) return x[i].b < y[i].b;
      if (x[i].a != y[i].a) return x[i].a < y[i].a;
    }
    return false;
  });
  return graph_from_predicate(12, [&](int u, int v) {
    ZPhi d2{0, 0};
    for (size_t i = 0; i < 3; ++i) {
      ZPhi d = pts[static_cast<size_t>(u)][i] - pts[static_cast<size_t>(v)][i];
      d2 = d2 + d * d;
    }
    return d2 == ZPhi{4, 0};
  });
}

// 56 vectors +-(3,3,-1,...,-1) in R^8, adjacent at inner product -8.
// Its array is {27,16,1;1,16,27}: the distance-2 relation of the E7 polytope graph.
inline Graph gosset() {
  auto pairs = subsets(8, 2);
  std::vector<std::array<int, 8>> vec;
  for (int sgn : {1, -1})
    for (const auto& p : pairs) {
      std::array<int, 8> v;
      v.fill(-sgn);
      v[static_cast<size_t>(p[0])] = v[static_cast<size_t>(p[1])] = 3 * sgn;
      vec.push_back(v);
    }
  return graph_from_predicate(56, [&](int u, int v) {
    int ip = 0;
    for (size_t i = 0; i < 8; ++i) ip += vec[static_cast<size_t>(u)][i] * vec[static_cast<size_t>(v)][i];
    return ip == -8;
  });
}

// SRG(27,16,10,8): complement of the local graph of gosset()
inline Graph schlafli() { return complement(local_graph(gosset(), 0)); }

// Seidel switching of T(8) on the vertices (= edges of K8) of a 2-regular or 1-regular graph
inline Graph chang(int which) {
  std::vector<std::pair<int, int>> sw;
  switch (which) {
    case 1:
      sw = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
      break;
    case 2:
      for (int i = 0; i < 8; ++i) sw.emplace_back(std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8));
      break;
    case 3:
      sw = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}};
      break;
    default:
      throw InvalidFamily("chang: index must be 1, 2 or 3");
  }
  auto pairs = subsets(8, 2);
  std::vector<int> S;
  for (size_t i = 0; i < pairs.size(); ++i)
    for (auto [a, b] : sw)
      if (pairs[i][0] == a && pairs[i][1] == b) S.push_back(static_cast<int>(i));
  return seidel_switch(triangular(8), S);
}

inline Graph distance_k_graph(const Graph& g, int k) {
  int D = diameter(g);
  if (k < 1 || k > D) throw std::invalid_argument("distance-" + std::to_string(k) + " graph: k must lie in [1, " + std::to_string(D) + "]");
  Graph h(g.order());
  for (int x = 0; x < g.order(); ++x) {
    auto d = distances_from(g, x);
    for (int y = x + 1; y < g.order(); ++y)
      if (d[static_cast<size_t>(y)] == k) h.add_edge(x, y);
  }
  return h;
}

// Vertices K v for v in GF(q)^2 \ 0, K of index r; Ku ~ Kv iff B(u, v) in bK, B(u,v) = u1 v2 - u2 v1.
inline Graph symplectic_cover(int q, int r, int b) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidFamily("symplectic-cover: q = rm + 1 must be a prime power, got q = " + std::to_string(q));
  if (r <= 1 || (q - 1) % r != 0)
    throw InvalidFamily("symplectic-cover: q = rm + 1 must be a prime power with r > 1 dividing q - 1");
  const int m = (q - 1) / r;
  if (m % 2 != 0 && pe->first != 2)
    throw InvalidFamily("symplectic-cover: q = rm + 1 needs m even or q a power of two");
  FiniteField f(q);
  if (b <= 0 || b >= q) throw InvalidFamily("symplectic-cover: b must be a nonzero field element");
  auto K = f.subgroup_of_index(r);
  std::vector<bool> inbK(static_cast<size_t>(q), false);
  for (int k : K) inbK[static_cast<size_t>(f.mul(b, k))] = true;
  // orbit ids in first-appearance order over v = (v1, v2) lexicographic
  std::vector<int> orbit(static_cast<size_t>(q * q), -1);
  std::vector<std::pair<int, int>> rep;
  for (int v1 = 0; v1 < q; ++v1)
    for (int v2 = 0; v2 < q; ++v2) {
      if (v1 == 0 && v2 == 0) continue;
      if (orbit[static_cast<size_t>(v1 * q + v2)] >= 0) continue;
      int id = static_cast<int>(rep.size());
      rep.emplace_back(v1, v2);
      for (int k : K) orbit[static_cast<size_t>(f.mul(k, v1) * q + f.mul(k, v2))] = id;
    }
  const int n = static_cast<int>(rep.size());
  return graph_from_predicate(n, [&](int u, int v) {
    auto [u1, u2] = rep[static_cast<size_t>(u)];
    auto [v1, v2] = rep[static_cast<size_t>(v)];
    int B = f.sub(f.mul(u1, v2), f.mul(u2, v1));
    return B != 0 && inbK[static_cast<size_t>(B)];
  });
}

inline bool is_locally(const Graph& g, const Graph& h) {
  for (int x = 0; x < g.order(); ++x)
    if (g.degree(x) != h.order() || !isomorphic(local_graph(g, x), h)) return false;
  return true;
}

// ---- family specs --------------------------------------------------------------

// "[co-]name[:p1,p2,...]", e.g. "paley:13", "co-chang:2", "symplectic-cover:16,3,1"
struct FamilySpec {
  std::string name;
  std::vector<int> params;
  bool complemented = false;

  std::string str() const {
    std::string s = (complemented ? "co-" : "") + name;
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
  }

  static FamilySpec parse(const std::string& text) {
    FamilySpec f;
    std::string s = text;
    if (s.rfind("co-", 0) == 0) {
      f.complemented = true;
      s = s.substr(3);
    }
    auto colon = s.find(':');
    f.name = s.substr(0, colon);
    if (colon != std::string::npos) {
      std::string rest = s.substr(colon + 1);
      size_t start = 0;
      while (start <= rest.size()) {
        size_t comma = rest.find(',', start);
        std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw InvalidFamily("bad family parameter '" + tok + "' in '" + text + "'");
        }
        if (used != tok.size()) throw InvalidFamily("bad family parameter '" + tok + "' in '" + text + "'");
        f.params.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    return f;
  }
};

struct FamilyInfo {
  std::string name;
  int arity;
  std::string usage;
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> t{
      {"complete", 1, "complete:n"},
      {"cycle", 1, "cycle:n"},
      {"multipartite", 2, "multipartite:n,t  (K_{n x t})"},
      {"triangular", 1, "triangular:n  (T(n) = J(n,2))"},
      {"grid", 1, "grid:n  (n x n rook's graph)"},
      {"grid-complement", 1, "grid-complement:n"},
      {"paley", 1, "paley:q  (q = 1 mod 4 prime power)"},
      {"johnson", 2, "johnson:n,k"},
      {"halved-cube", 1, "halved-cube:n"},
      {"halved-cube-distance-2", 1, "halved-cube-distance-2:n"},
      {"folded-cube", 1, "folded-cube:n"},
      {"icosahedron", 0, "icosahedron"},
      {"petersen", 0, "petersen"},
      {"shrikhande", 0, "shrikhande"},
      {"clebsch", 1, "clebsch:5 | clebsch:10"},
      {"schlafli", 0, "schlafli"},
      {"gosset", 0, "gosset"},
      {"chang", 1, "chang:1 | chang:2 | chang:3"},
      {"symplectic-cover", 3, "symplectic-cover:q,r,b"},
      {"conway-smith", 0, "conway-smith  (embedded asset)"},
      {"doro", 0, "doro  (embedded asset)"},
  };
  return t;
}

inline Graph build(const FamilySpec& spec) {
  const FamilyInfo* info = nullptr;
  for (const auto& f : family_table())
    if (f.name == spec.name) info = &f;
  if (!info) throw InvalidFamily("unknown family '" + spec.name + "'");
  if (static_cast<int>(spec.params.size()) != info->arity)
    throw InvalidFamily("family '" + spec.name + "' takes " + std::to_string(info->arity) + " parameter(s): " + info->usage);
  const auto& p = spec.params;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw InvalidFamily(spec.name + ": " + msg);
  };
  Graph g;
  const std::string& n = spec.name;
  if (n == "complete") {
    need(p[0] >= 1 && p[0] <= 300, "need 1 <= n <= 300");
    g = complete_graph(p[0]);
  } else if (n == "cycle") {
    need(p[0] >= 3 && p[0] <= 300, "need 3 <= n <= 300");
    g = cycle_graph(p[0]);
  } else if (n == "multipartite") {
    g = multipartite(p[0], p[1]);
  } else if (n == "triangular") {
    g = triangular(p[0]);
  } else if (n == "grid") {
    g = grid(p[0]);
  } else if (n == "grid-complement") {
    g = complement(grid(p[0]));
  } else if (n == "paley") {
    g = paley(p[0]);
  } else if (n == "johnson") {
    g = johnson(p[0], p[1]);
  } else if (n == "halved-cube") {
    g = halved_cube(p[0]);
  } else if (n == "halved-cube-distance-2") {
    need(p[0] >= 4, "need n >= 4 so that distance 2 occurs");
    g = distance_k_graph(halved_cube(p[0]), 2);
  } else if (n == "folded-cube") {
    g = folded_cube(p[0]);
  } else if (n == "icosahedron") {
    g = icosahedron();
  } else if (n == "petersen") {
    g = petersen();
  } else if (n == "shrikhande") {
    g = shrikhande();
  } else if (n == "clebsch") {
    g = clebsch(p[0]);
  } else if (n == "schlafli") {
    g = schlafli();
  } else if (n == "gosset") {
    g = gosset();
  } else if (n == "chang") {
    g = chang(p[0]);
  } else if (n == "symplectic-cover") {
    g = symplectic_cover(p[0], p[1], p[2]);
  } else {
    g = load_named_asset(n);
  }
  return spec.complemented ? complement(g) : g;
}

inline Graph build(const std::string& spec) { return build(FamilySpec::parse(spec)); }

}  // namespace drg
