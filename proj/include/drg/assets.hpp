#pragma once

#include "drg/drg_check.hpp"
#include "drg/embedded_assets.hpp"
#include "drg/graph_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

class AssetCertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedGraphEntry {
  std::string name;
  std::string source;  // "embedded adjacency asset"
  const char* text;
  IntersectionArray expected;
  int expected_order;
};

inline const std::vector<NamedGraphEntry>& named_assets() {
  static const std::vector<NamedGraphEntry> t{
      {"conway-smith", "embedded adjacency asset", embedded::conway_smith, IntersectionArray::parse("{10,6,4,1;1,2,6,10}"), 63},
      {"doro", "embedded adjacency asset", embedded::doro, IntersectionArray::parse("{10,6,4;1,2,5}"), 65},
  };
  return t;
}

// parse + certify; any mismatch is fatal
inline Graph certify_asset(const NamedGraphEntry& e) {
  const std::string& id = e.name;
  Graph g;
  try {
    g = parse_native(e.text);
  } catch (const ParseError& err) {
    throw AssetCertificationError("asset '" + id + "' is malformed: " + err.what());
  }
  if (g.order() != e.expected_order)
    throw AssetCertificationError("asset '" + id + "' has " + std::to_string(g.order()) + " vertices, expected " +
                                  std::to_string(e.expected_order));
  if (!is_connected(g)) throw AssetCertificationError("asset '" + id + "' is disconnected");
  DRGCertificate cert = check_drg(g);
  if (!cert.distance_regular())
    throw AssetCertificationError("asset '" + id + "' is not distance-regular: " + cert.violation->what);
  if (*cert.array != e.expected)
    throw AssetCertificationError("asset '" + id + "' has array " + cert.array->str() + ", expected " + e.expected.str());
  return g;
}

inline Graph load_named_asset(const std::string& id) {
  for (const auto& e : named_assets())
    if (e.name == id) return certify_asset(e);
  throw std::invalid_argument("unknown family '" + id + "'");
}

}  // namespace drg
