#pragma once

#include "drg/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n <count>" then "i: j1 j2 ..." lines; '#' starts a comment.
inline Graph parse_native(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<int>> lists;
  std::vector<int> defined_at;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (n < 0) {
      if (head != "n" || !(ls >> n) || n < 0) throw ParseError(lineno, "expected header 'n <count>'");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing text after header");
      lists.assign(static_cast<size_t>(n), {});
      defined_at.assign(static_cast<size_t>(n), 0);
      continue;
    }
    if (head.empty() || head.back() != ':') throw ParseError(lineno, "expected '<vertex>:'");
    int v;
    try {
      size_t used = 0;
      v = std::stoi(head.substr(0, head.size() - 1), &used);
      if (used != head.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad vertex label '" + head + "'");
    }
    if (v < 0 || v >= n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    if (defined_at[static_cast<size_t>(v)]) throw ParseError(lineno, "vertex " + std::to_string(v) + " listed twice");
    defined_at[static_cast<size_t>(v)] = lineno;
    std::string tok;
    while (ls >> tok) {
      int u;
      try {
        size_t used = 0;
        u = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad neighbour '" + tok + "'");
      }
      if (u < 0 || u >= n) throw ParseError(lineno, "neighbour " + std::to_string(u) + " out of range");
      if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(v));
      lists[static_cast<size_t>(v)].push_back(u);
    }
  }
  if (n < 0) throw ParseError(0, "missing header 'n <count>'");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u : lists[static_cast<size_t>(v)]) g.add_edge(v, u);
  // symmetry: every edge must be listed from both ends
  for (int v = 0; v < n; ++v) {
    Bitset listed(n);
    for (int u : lists[static_cast<size_t>(v)]) listed.set(u);
    int bad = -1;
    g.neighbours(v).for_each([&](int u) {
      if (bad < 0 && !listed.test(u)) bad = u;
    });
    if (bad >= 0) {
      int line = defined_at[static_cast<size_t>(v)] ? defined_at[static_cast<size_t>(v)]
                                                     : defined_at[static_cast<size_t>(bad)];
      throw ParseError(line, "asymmetric adjacency: " + std::to_string(bad) + " lists " + std::to_string(v) + " but " +
                                 std::to_string(v) + " does not list " + std::to_string(bad));
    }
  }
  return g;
}

inline std::string to_native(const Graph& g) {
  std::string s = "n " + std::to_string(g.order()) + "\n";
  for (int v = 0; v < g.order(); ++v) {
    s += std::to_string(v) + ":";
    g.neighbours(v).for_each([&](int u) { s += " " + std::to_string(u); });
    s += "\n";
  }
  return s;
}

// graph6, optional ">>graph6<<" header; upper triangle in column order
inline Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  const std::string header = ">>graph6<<";
  if (s.compare(0, header.size(), header) == 0) s = s.substr(header.size());
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw ParseError(1, "graph6 string truncated");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw ParseError(1, "graph6 byte out of range");
    return c - 63;
  };
  long n = next();
  if (n == 63) {
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  if (n > 100000) throw ParseError(1, "graph6 order too large");
  Graph g(static_cast<int>(n));
  int bitpos = 6;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bitpos == 6) {
        cur = next();
        bitpos = 0;
      }
      if ((cur >> (5 - bitpos)) & 1) g.add_edge(i, j);
      ++bitpos;
    }
  if (pos != s.size()) throw ParseError(1, "trailing bytes after graph6 data");
  return g;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// native format unless the file looks like graph6
inline Graph read_graph_file(const std::string& path) {
  std::string text = read_file(path);
  bool g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
  if (text.rfind(">>graph6<<", 0) == 0) g6 = true;
  return g6 ? parse_graph6(text) : parse_native(text);
}

}  // namespace drg
