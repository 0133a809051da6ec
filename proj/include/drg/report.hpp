#pragma once

#include "drg/array_spectrum.hpp"
#include "drg/feasibility.hpp"
#include "drg/properties.hpp"
#include "drg/scans.hpp"
#include "drg/spectral.hpp"
#include "drg/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

// Record layouts are documented in docs/report_schema.md.
namespace drg::report {

using nlohmann::ordered_json;

inline const char* kind_name(AlgebraicValue::Kind k) {
  switch (k) {
    case AlgebraicValue::Kind::integer:
      return "integer";
    case AlgebraicValue::Kind::rational:
      return "rational";
    case AlgebraicValue::Kind::quadratic:
      return "quadratic";
    case AlgebraicValue::Kind::interval:
      return "interval";
  }
  return "?";
}

inline ordered_json array_json(const IntersectionArray& a) {
  return ordered_json{{"text", a.str()}, {"b", a.b}, {"c", a.c}, {"diameter", a.diameter()}};
}

inline ordered_json value_json(const AlgebraicValue& v) {
  return ordered_json{{"exact", v.to_string()}, {"kind", kind_name(v.kind)}, {"approx", v.to_double()}};
}

// ---- spectra -------------------------------------------------------------

inline ordered_json array_spectrum_json(const IntersectionArray& a, const SpectrumEstimate& s) {
  ordered_json ev = ordered_json::array();
  for (const auto& e : s.eigenvalues) {
    ordered_json j{{"value", value_json(e.display)}, {"minimal_polynomial", e.minimal_poly.str()}};
    j["multiplicity"] = e.multiplicity ? ordered_json(to_string(*e.multiplicity)) : ordered_json(nullptr);
    j["multiplicity_approx"] = e.multiplicity_approx;
    ev.push_back(std::move(j));
  }
  return ordered_json{{"record", "spectrum"}, {"source", "intersection-array"}, {"array", array_json(a)}, {"eigenvalues", ev}};
}

inline ordered_json graph_spectrum_json(int order, const std::vector<Eigenvalue>& spec) {
  ordered_json ev = ordered_json::array();
  for (const auto& e : spec) ev.push_back(ordered_json{{"value", value_json(describe(e.value))}, {"multiplicity", std::to_string(e.multiplicity)}});
  return ordered_json{{"record", "spectrum"}, {"source", "adjacency-matrix"}, {"order", order}, {"eigenvalues", ev}};
}

inline std::string array_spectrum_text(const IntersectionArray& a, const SpectrumEstimate& s) {
  std::ostringstream o;
  o << "spectrum of " << a.str() << "\n";
  for (const auto& e : s.eigenvalues) {
    o << "  " << e.display.to_string() << "  multiplicity ";
    if (e.multiplicity)
      o << to_string(*e.multiplicity);
    else
      o << "~" << e.multiplicity_approx << " (irrational eigenvalue; conjugates share it)";
    o << "\n";
  }
  return o.str();
}

inline std::string graph_spectrum_text(int order, const std::vector<Eigenvalue>& spec) {
  std::ostringstream o;
  o << "spectrum of the adjacency matrix (" << order << " vertices)\n";
  for (const auto& e : spec) o << "  " << describe(e.value).to_string() << "  multiplicity " << e.multiplicity << "\n";
  return o.str();
}

// ---- feasibility ---------------------------------------------------------------

inline ordered_json feasibility_json(const FeasibilityReport& r) {
  ordered_json fs = ordered_json::array();
  for (const auto& f : r.filters) fs.push_back(ordered_json{{"id", f.id}, {"name", f.name}, {"verdict", to_string(f.verdict)}, {"witness", f.witness}});
  ordered_json j{{"record", "feasibility"},
                 {"array", array_json(r.array)},
                 {"assumptions", ordered_json{{"contains_quadrangle", r.assumptions.contains_quadrangle}}},
                 {"shape", r.shape.names()},
                 {"filters", fs},
                 {"verdict", r.verdict()}};
  if (auto p = r.primary_failure())
    j["primary_failure"] = p->id;
  else
    j["primary_failure"] = nullptr;
  if (r.literature)
    j["literature"] = ordered_json{{"id", r.literature->id}, {"claim", r.literature->claim}, {"citation", r.literature->citation}};
  else
    j["literature"] = nullptr;
  return j;
}

inline std::string feasibility_text(const FeasibilityReport& r) {
  std::ostringstream o;
  o << "array " << r.array.str() << (r.assumptions.contains_quadrangle ? "  [assuming an induced quadrangle]" : "") << "\n";
  auto shape = r.shape.names();
  if (!shape.empty()) {
    o << "shape:";
    for (const auto& s : shape) o << " " << s;
    o << "\n";
  }
  for (const auto& f : r.filters) {
    std::string v = f.verdict == Verdict::pass ? "PASS" : (f.verdict == Verdict::fail ? "FAIL" : "n/a ");
    o << "  " << v << " " << f.id << " " << f.name << ": " << f.witness << "\n";
  }
  o << "verdict: " << r.verdict();
  if (auto p = r.primary_failure()) o << " (" << p->id << ")";
  o << "\n";
  if (r.literature) o << "literature: " << r.literature->id << ": " << r.literature->claim << " [" << r.literature->citation << "]\n";
  return o.str();
}

// ---- local property --------------------------------------------------------------

inline ordered_json local_json(const LocalSpectrumSummary& s) {
  ordered_json vs = ordered_json::array();
  for (const auto& v : s.vertices) {
    ordered_json j{{"vertex", v.vertex}, {"local_order", v.local_order}};
    j["theta1"] = v.theta1 ? value_json(*v.theta1) : ordered_json(nullptr);
    j["passes"] = v.passes;
    j["m_x"] = v.m_x;
    j["local_connected"] = v.local_connected;
    j["local_complement_connected"] = v.local_complement_connected;
    vs.push_back(std::move(j));
  }
  ordered_json j{{"record", "local-check"}, {"threshold", to_string(s.threshold)}, {"regular", s.regular}, {"all_pass", s.all_pass()}};
  j["first_failure"] = s.first_failure() ? ordered_json(*s.first_failure()) : ordered_json(nullptr);
  j["vertices"] = vs;
  return j;
}

inline std::string local_text(const LocalSpectrumSummary& s) {
  std::ostringstream o;
  if (!s.regular) o << "warning: graph is not regular\n";
  o << "local second eigenvalue <= " << to_string(s.threshold) << " at every vertex: " << (s.all_pass() ? "yes" : "no") << "\n";
  for (const auto& v : s.vertices) {
    o << "  vertex " << v.vertex << ": " << v.local_order << " neighbours, theta1 = " << (v.theta1 ? v.theta1->to_string() : "-")
      << ", m_x = " << v.m_x << ", connected " << (v.local_connected ? "yes" : "no") << ", complement connected "
      << (v.local_complement_connected ? "yes" : "no") << (v.passes ? "" : "  FAIL") << "\n";
  }
  return o.str();
}

// ---- scans -------------------------------------------------------------------------

inline ordered_json entry_json(const ScanEntry& e) {
  ordered_json j{{"stage", e.stage}, {"params", e.params}};
  j["array"] = e.array ? ordered_json(e.array->str()) : ordered_json(nullptr);
  j["fate"] = fate_key(e.fate);
  j["filter"] = e.filter;
  j["witness"] = e.witness;
  j["trail"] = e.trail;
  j["fact"] = e.fact ? ordered_json(*e.fact) : ordered_json(nullptr);
  j["witness_graph"] = e.witness_graph ? ordered_json(*e.witness_graph) : ordered_json(nullptr);
  return j;
}

inline ordered_json scan_json(const ScanResult& r) {
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json es = ordered_json::array();
    for (const auto& e : c.entries) es.push_back(entry_json(e));
    cases.push_back(ordered_json{{"id", c.id}, {"title", c.title}, {"domain", c.domain}, {"notes", c.notes}, {"entries", es}});
  }
  return ordered_json{{"record", "scan"}, {"scan", r.scan}, {"notes", r.notes}, {"cases", cases}};
}

// parameter-stage eliminations are summarised; everything carrying an array is listed
inline std::string scan_text(const ScanResult& r) {
  std::ostringstream o;
  o << "scan " << r.scan << "\n";
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  for (const auto& c : r.cases) {
    o << "\n[" << c.id << "] " << c.title << "\n  domain: " << c.domain << "\n";
    std::map<std::string, int> killed;
    int enumerated = 0;
    for (const auto& e : c.entries) {
      ++enumerated;
      if (e.stage == "parameters" && e.fate != Fate::surviving) {
        ++killed[e.filter];
        continue;
      }
      if (e.stage == "array" && e.fate == Fate::eliminated_arithmetic && c.id == "diam2-case2") {
        ++killed[e.filter];
        continue;
      }
      o << "  " << e.stage << " " << e.params;
      if (e.array) o << "  " << e.array->str();
      o << "  -> " << fate_key(e.fate);
      if (!e.filter.empty()) o << " [" << e.filter << "] " << e.witness;
      if (e.fact && e.fate != Fate::eliminated_imported) o << " (see also " << *e.fact << ")";
      if (e.witness_graph) o << " witness " << *e.witness_graph;
      o << "\n";
    }
    o << "  " << enumerated << " entries";
    for (const auto& [f, n] : killed) o << "; " << n << " eliminated by " << f;
    o << "\n";
    for (const auto& n : c.notes) o << "  note: " << n << "\n";
  }
  return o.str();
}

// ---- verification ----------------------------------------------------------------------

inline ordered_json verification_json(const std::string& suite, const std::vector<VerificationReport>& rs) {
  ordered_json items = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json cs = ordered_json::array();
    for (const auto& c : r.checks) cs.push_back(ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    ordered_json j{{"name", r.name}, {"family", r.family}, {"status", to_string(r.status)}};
    j["expected"] = r.expected ? ordered_json(r.expected->str()) : ordered_json(nullptr);
    j["certified"] = r.certified ? ordered_json(r.certified->str()) : ordered_json(nullptr);
    j["checks"] = cs;
    j["note"] = r.note;
    items.push_back(std::move(j));
  }
  return ordered_json{{"record", "verification"}, {"suite", suite}, {"failed", any_failed(rs)}, {"reports", items}};
}

inline std::string verification_text(const std::string& suite, const std::vector<VerificationReport>& rs) {
  std::ostringstream o;
  o << "verify " << suite << "\n";
  for (const auto& r : rs) {
    o << "  " << to_string(r.status) << "  " << r.name;
    if (r.certified) o << "  " << r.certified->str();
    if (!r.note.empty()) o << "  (" << r.note << ")";
    o << "\n";
    for (const auto& c : r.checks) o << "      " << (c.passed ? "ok  " : "FAIL") << " " << c.name << ": " << c.detail << "\n";
  }
  o << (any_failed(rs) ? "result: FAILED\n" : "result: ok\n");
  return o.str();
}

}  // namespace drg::report
