#pragma once

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"

#include <optional>
#include <string>

namespace drg {

// ---- distance-regularity certificate -----------------------------------------

struct DRGViolation {
  int x = -1, y = -1;
  std::string what;
};

struct DRGCertificate {
  std::optional<IntersectionArray> array;
  std::optional<DRGViolation> violation;
  bool distance_regular() const { return array.has_value(); }
};

// checks b_i, c_i over every ordered pair (x, y)
inline DRGCertificate check_drg(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw DisconnectedGraph(g);
  DRGCertificate cert;
  if (n == 1) {
    cert.array = IntersectionArray{};
    return cert;
  }
  std::vector<std::vector<int>> dist(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) dist[static_cast<size_t>(x)] = distances_from(g, x);
  int D = 0;
  for (const auto& row : dist)
    for (int d : row) D = std::max(D, d);
  std::vector<long long> b(static_cast<size_t>(D + 1), -1), c(static_cast<size_t>(D + 1), -1);
  for (int x = 0; x < n; ++x) {
    const auto& dx = dist[static_cast<size_t>(x)];
    for (int y = 0; y < n; ++y) {
      int i = dx[static_cast<size_t>(y)];
      long long bi = 0, ci = 0;
      g.neighbours(y).for_each([&](int z) {
        int dz = dx[static_cast<size_t>(z)];
        if (dz == i + 1) ++bi;
        if (dz == i - 1) ++ci;
      });
      auto& B = b[static_cast<size_t>(i)];
      auto& C = c[static_cast<size_t>(i)];
      if (B < 0) {
        B = bi;
        C = ci;
      } else if (B != bi || C != ci) {
        cert.violation = DRGViolation{x, y,
                                      "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") at distance " + std::to_string(i) +
                                          " has b = " + std::to_string(bi) + ", c = " + std::to_string(ci) + " but earlier pairs had b = " +
                                          std::to_string(B) + ", c = " + std::to_string(C)};
        return cert;
      }
    }
  }
  IntersectionArray a;
  for (int i = 0; i < D; ++i) a.b.push_back(b[static_cast<size_t>(i)]);
  for (int i = 1; i <= D; ++i) a.c.push_back(c[static_cast<size_t>(i)]);
  cert.array = a;
  return cert;
}

}  // namespace drg
