#pragma once

#include "drg/graph.hpp"

#include <stdexcept>
#include <vector>

namespace drg {

inline constexpr int kCocliqueBudget = 120;

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

// Tomita-style branch and bound; colour classes bound the clique size.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run() {
    Bitset all(g_.order());
    all.set_all();
    expand(all, 0);
    return best_;
  }

 private:
  void colour_sort(const Bitset& P, std::vector<int>& order, std::vector<int>& bounds) const {
    Bitset uncoloured = P;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset q = uncoloured;
      while (q.any()) {
        int v = q.first();
        q.reset(v);
        q.andnot(g_.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        bounds.push_back(colour);
      }
    }
  }

  void expand(Bitset P, int size) {
    std::vector<int> order, bounds;
    colour_sort(P, order, bounds);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bounds[static_cast<size_t>(i)] <= best_) return;
      int v = order[static_cast<size_t>(i)];
      Bitset next = P & g_.neighbours(v);
      if (next.none()) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(next, size + 1);
      }
      P.reset(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace detail

inline int max_clique(const Graph& g) {
  if (g.order() > kCocliqueBudget) throw BudgetExceeded("instance too large");
  if (g.order() == 0) return 0;
  return detail::CliqueSearch(g).run();
}

inline int max_coclique(const Graph& g) {
  if (g.order() > kCocliqueBudget) throw BudgetExceeded("instance too large");
  return max_clique(complement(g));
}

}  // namespace drg
