#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace drg {

// Fixed-length dynamic bitset; length chosen at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }
  void set(int i) { w_[word(i)] |= bit(i); }
  void reset(int i) { w_[word(i)] &= ~bit(i); }
  void flip(int i) { w_[word(i)] ^= bit(i); }
  bool test(int i) const { return (w_[word(i)] & bit(i)) != 0; }

  void set_all() {
    for (auto& x : w_) x = ~std::uint64_t{0};
    clear_tail();
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  // first set index at or after i, or -1
  int next(int i) const {
    if (i >= n_) return -1;
    size_t k = word(i);
    std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (x) return static_cast<int>(k * 64 + static_cast<size_t>(std::countr_zero(x)));
      if (++k >= w_.size()) return -1;
      x = w_[k];
    }
  }
  int first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        f(static_cast<int>(k * 64 + static_cast<size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
    return c;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  static size_t word(int i) { return static_cast<size_t>(i) / 64; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (static_cast<unsigned>(i) % 64); }
  void clear_tail() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace drg
