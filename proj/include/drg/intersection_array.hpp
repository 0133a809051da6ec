#pragma once

#include "drg/matrix.hpp"

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

class ArrayParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {b0,...,b_{D-1}; c1,...,c_D}.  Raw data: validity is a filter verdict, not an invariant.
struct IntersectionArray {
  std::vector<long long> b;
  std::vector<long long> c;

  int diameter() const { return static_cast<int>(b.size()); }
  long long k() const { return b.empty() ? 0 : b[0]; }
  // b_i for 0 <= i <= D (b_D = 0)
  long long b_at(int i) const { return i < diameter() ? b[static_cast<size_t>(i)] : 0; }
  // c_i for 0 <= i <= D (c_0 = 0)
  long long c_at(int i) const { return i == 0 ? 0 : c[static_cast<size_t>(i - 1)]; }
  long long a_at(int i) const { return k() - b_at(i) - c_at(i); }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += ";";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
  }

  static IntersectionArray parse(const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 3 || s.front() != '{' || s.back() != '}')
      throw ArrayParseError("malformed array literal '" + text + "': expected {b0,...;c1,...}");
    std::string body = s.substr(1, s.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string::npos || body.find(';', semi + 1) != std::string::npos)
      throw ArrayParseError("malformed array literal '" + text + "': expected exactly one ';'");
    auto split = [&](const std::string& part) {
      std::vector<long long> out;
      if (part.empty()) return out;
      size_t start = 0;
      while (true) {
        size_t comma = part.find(',', start);
        std::string tok = part.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw ArrayParseError("malformed array literal '" + text + "': empty entry");
        size_t used = 0;
        long long v;
        try {
          v = std::stoll(tok, &used);
        } catch (const std::exception&) {
          throw ArrayParseError("malformed array literal '" + text + "': bad number '" + tok + "'");
        }
        if (used != tok.size()) throw ArrayParseError("malformed array literal '" + text + "': bad number '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return out;
    };
    IntersectionArray a{split(body.substr(0, semi)), split(body.substr(semi + 1))};
    if (a.b.size() != a.c.size())
      throw ArrayParseError("malformed array literal '" + text + "': b and c lists differ in length");
    return a;
  }

  friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct DRGParams {
  int D = 0;
  long long k = 0;
  std::vector<long long> a;  // a_0..a_D
  std::vector<Rational> ki;  // k_0..k_D
  Rational nu;
  bool ki_integral = true;
  bool ki_positive = true;
};

inline DRGParams derive(const IntersectionArray& arr) {
  DRGParams p;
  p.D = arr.diameter();
  p.k = arr.k();
  for (int i = 0; i <= p.D; ++i) p.a.push_back(arr.a_at(i));
  Rational cur = 1;
  p.ki.push_back(cur);
  for (int i = 1; i <= p.D; ++i) {
    long long ci = arr.c_at(i);
    if (ci == 0) {
      p.ki_positive = false;
      p.ki_integral = false;
      cur = 0;
    } else {
      cur = cur * ratio(arr.b_at(i - 1)) / ratio(ci);
    }
    p.ki.push_back(cur);
  }
  p.nu = 0;
  for (const auto& x : p.ki) {
    p.nu += x;
    if (!is_integer(x)) p.ki_integral = false;
    if (x <= 0) p.ki_positive = false;
  }
  return p;
}

// rows i = 0..D: c_i at i-1, a_i at i, b_i at i+1
inline RationalMatrix tridiagonal_matrix(const IntersectionArray& arr) {
  const int D = arr.diameter();
  RationalMatrix m(D + 1);
  for (int i = 0; i <= D; ++i) {
    if (i > 0) m(i, i - 1) = ratio(arr.c_at(i));
    m(i, i) = ratio(arr.a_at(i));
    if (i < D) m(i, i + 1) = ratio(arr.b_at(i));
  }
  return m;
}

}  // namespace drg
