#include "drg/constructions.hpp"
#include "drg/feasibility.hpp"
#include "drg/graph_io.hpp"
#include "drg/isomorphism.hpp"
#include "drg/report.hpp"
#include "drg/scans.hpp"
#include "drg/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

enum Exit : int {
  ok = 0,
  verification_failed = 1,
  usage = 2,
  malformed_array = 3,
  file_error = 4,
  bad_family = 5,
  budget = 6,
  internal = 70,
};

const char* kExitHelp =
    "Exit codes:\n"
    "  0   success (an infeasible array or a non-isomorphic pair is still a success)\n"
    "  1   verify: some check failed, or a construction failed its certificate\n"
    "  2   usage error\n"
    "  3   malformed intersection array literal\n"
    "  4   file cannot be read/written or does not parse\n"
    "  5   unknown family or invalid family parameters\n"
    "  6   search budget exceeded\n"
    "  70  internal error\n"
    "Environment: DRG_THREADS caps worker threads.\n";

struct Options {
  bool json = false;
};

void emit(const Options& o, const drg::report::ordered_json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

drg::Rational parse_threshold(const std::string& s) {
  drg::Rational t;
  if (t.set_str(s, 10) != 0) throw CLI::ValidationError("--t", "expected a rational such as 1 or 3/2, got '" + s + "'");
  t.canonicalize();
  return t;
}

int cmd_construct(const Options&, const std::string& family, const std::vector<int>& params, const std::string& out) {
  drg::FamilySpec spec = drg::FamilySpec::parse(family);
  for (int p : params) spec.params.push_back(p);
  drg::Graph g = drg::build(spec);
  std::string text = drg::to_native(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw drg::FileError("cannot write " + out);
    f << text;
    if (!f) throw drg::FileError("cannot write " + out);
  }
  return ok;
}

int cmd_spectrum(const Options& o, const std::string& input) {
  if (!input.empty() && input.front() == '{') {
    drg::IntersectionArray a = drg::IntersectionArray::parse(input);
    try {
      drg::SpectrumEstimate s = drg::spectrum(a);
      emit(o, drg::report::array_spectrum_json(a, s), drg::report::array_spectrum_text(a, s));
    } catch (const drg::InfeasibleArray& e) {
      // a negative answer, not a tool failure
      drg::report::ordered_json j{{"record", "spectrum"}, {"source", "intersection-array"}, {"array", drg::report::array_json(a)}, {"eigenvalues", nullptr}, {"error", e.what()}};
      emit(o, j, std::string("no spectrum: ") + e.what() + "\n");
    }
    return ok;
  }
  drg::Graph g = drg::read_graph_file(input);
  auto spec = drg::real_spectrum(drg::char_poly(g.adjacency_matrix()));
  emit(o, drg::report::graph_spectrum_json(g.order(), spec), drg::report::graph_spectrum_text(g.order(), spec));
  return ok;
}

int cmd_local(const Options& o, const std::string& file, const std::string& t) {
  drg::Rational thr = parse_threshold(t);
  drg::Graph g = drg::read_graph_file(file);
  drg::LocalSpectrumSummary s = drg::local_property(g, thr);
  if (!s.regular) std::cerr << "warning: graph is not regular\n";
  emit(o, drg::report::local_json(s), drg::report::local_text(s));
  return ok;
}

int cmd_feasible(const Options& o, const std::string& lit, bool quad) {
  drg::IntersectionArray a = drg::IntersectionArray::parse(lit);
  drg::FeasibilityReport r = drg::feasibility(a, drg::Assumptions{quad});
  emit(o, drg::report::feasibility_json(r), drg::report::feasibility_text(r));
  return ok;
}

int cmd_scan(const Options& o, const std::string& which) {
  drg::ScanResult r = which == "diam2" ? drg::scan_diameter2() : drg::scan_diameter3plus();
  emit(o, drg::report::scan_json(r), drg::report::scan_text(r));
  return ok;
}

int cmd_verify(const Options& o, const std::string& which, std::uint64_t seed) {
  std::vector<drg::VerificationReport> rs;
  if (which == "thm-1-1") {
    rs = drg::verify_theorem_1_1();
  } else if (which == "thm-1-2") {
    rs = drg::verify_theorem_1_2();
  } else {
    drg::PropertyOptions po;
    po.seed = seed;
    rs = drg::verify_properties(po);
  }
  emit(o, drg::report::verification_json(which, rs), drg::report::verification_text(which, rs));
  return drg::any_failed(rs) ? verification_failed : ok;
}

int cmd_iso(const Options& o, const std::string& fa, const std::string& fb) {
  drg::Graph a = drg::read_graph_file(fa), b = drg::read_graph_file(fb);
  auto m = drg::find_isomorphism(a, b);
  drg::report::ordered_json j{{"record", "isomorphism"}, {"isomorphic", m.has_value()}};
  j["mapping"] = m ? drg::report::ordered_json(*m) : drg::report::ordered_json(nullptr);
  std::string text = m ? "isomorphic\nmapping:" : "not isomorphic\n";
  if (m) {
    for (size_t i = 0; i < m->size(); ++i) text += " " + std::to_string(i) + "->" + std::to_string((*m)[i]);
    text += "\n";
  }
  emit(o, j, text);
  return ok;
}

std::string family_help() {
  std::string s = "Families (prefix 'co-' for the complement):\n";
  for (const auto& f : drg::family_table()) s += "  " + f.usage + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for distance-regular graphs with small local eigenvalues"};
  app.require_subcommand(1);
  app.footer(kExitHelp);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output (schema: docs/report_schema.md)");

  std::string family, out, input, file, t = "1", lit, which, fa, fb;
  std::vector<int> params;
  bool quad = false;
  std::uint64_t seed = drg::PropertyOptions{}.seed;

  auto* construct = app.add_subcommand("construct", "build a graph family member and write it in native format");
  construct->footer(family_help());
  construct->add_option("family", family, "family spec, e.g. paley:13 or co-chang:2")->required();
  construct->add_option("params", params, "parameters, appended to those in the spec");
  construct->add_option("--out,-o", out, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of an intersection array or a graph file");
  spectrum->add_option("input", input, "array literal like \"{27,16,1;1,16,27}\" or a graph file")->required();

  auto* local = app.add_subcommand("local-check", "second largest local eigenvalue at every vertex");
  local->add_option("file", file, "graph file (native format or graph6)")->required();
  local->add_option("--t", t, "threshold (rational, default 1)");

  auto* feasible = app.add_subcommand("feasible", "run the feasibility filters on an intersection array");
  feasible->add_option("array", lit, "array literal")->required();
  feasible->add_flag("--quadrangle", quad, "assume an induced quadrangle (enables the Terwilliger filters)");

  auto* scan = app.add_subcommand("scan", "case scans for diameter 2 or diameter >= 3");
  scan->add_option("which", which, "diam2 | diam3")->required()->check(CLI::IsMember({"diam2", "diam3"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("which", which, "thm-1-1 | thm-1-2 | props")->required()->check(CLI::IsMember({"thm-1-1", "thm-1-2", "props"}));
  verify->add_option("--seed", seed, "seed for the randomised property tests");

  auto* iso = app.add_subcommand("iso", "test two graph files for isomorphism");
  iso->add_option("a", fa, "first graph file")->required();
  iso->add_option("b", fb, "second graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*construct) return cmd_construct(opt, family, params, out);
    if (*spectrum) return cmd_spectrum(opt, input);
    if (*local) return cmd_local(opt, file, t);
    if (*feasible) return cmd_feasible(opt, lit, quad);
    if (*scan) return cmd_scan(opt, which);
    if (*verify) return cmd_verify(opt, which, seed);
    if (*iso) return cmd_iso(opt, fa, fb);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const drg::ArrayParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed_array;
  } catch (const drg::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return file_error;
  } catch (const drg::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return file_error;
  } catch (const drg::InvalidFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_family;
  } catch (const drg::AssetCertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return verification_failed;
  } catch (const drg::CertificationFailure& e) {
    std::cerr << "error: certificate failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const drg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
