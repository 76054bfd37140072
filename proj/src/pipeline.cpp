#include "milnorfiber/pipeline.hpp"

#include <sstream>

namespace mf {

PipelineResult run_pipeline(const BiPoly& f, const BiPoly& g, bool curve_only) {
  PipelineResult r;
  r.f = f;
  r.g = g;
  r.curve_only = curve_only;
  r.expansion = expand_pair(f, g, curve_only);
  r.shear = r.expansion.shear_c;
  r.cluster = build_cluster(r.expansion.branches, r.expansion.contacts);
  r.graph = to_dual_graph(r.cluster);

  if (curve_only) {
    r.zeta = zeta_acampo(r.graph);
    r.chi = valuation_at_infinity(r.zeta);
    r.coverings = boundary_covering_data(r.graph);
  } else {
    r.part = partition(r.graph);
    r.zeta = zeta_phi(r.graph, *r.part);
    r.chi = euler_char(r.graph, *r.part);
    r.cls = classify(r.graph, *r.part);
    r.fd = fiber_description(r.graph, *r.part);
    r.surgery = boundary_surgery(*r.fd);
    if (r.cls->tag == HomotopyCase::CaseI) {
      // the fiber is (up to homotopy) the singular fiber of f; attach the
      // covering data of f's own resolution so the identification is concrete
      r.coverings = run_pipeline(f, BiPoly{}, true).coverings;
    }
  }
  return r;
}

PipelineResult invariants_from_graph(const DecoratedGraph& graph) {
  validate_graph(graph);
  PipelineResult r;
  r.graph = graph;
  if (graph.curve_mode()) {
    r.curve_only = true;
    r.zeta = zeta_acampo(graph);
    r.chi = valuation_at_infinity(r.zeta);
    r.coverings = boundary_covering_data(graph);
  } else {
    r.part = partition(graph);
    r.zeta = zeta_phi(graph, *r.part);
    r.chi = euler_char(graph, *r.part);
    r.cls = classify(graph, *r.part);
    r.fd = fiber_description(graph, *r.part);
    r.surgery = boundary_surgery(*r.fd);
  }
  return r;
}

GermPairFile parse_germ_file(const std::string& text) {
  GermPairFile out;
  std::istringstream in(text);
  std::string line;
  bool have_f = false;
  while (std::getline(in, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      // blank or comment-only line
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      throw input_error("germ file line is not of the form 'f = <poly>': " + line);
    }
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              key.end());
    if (key == "f") {
      out.f = parse_poly(val);
      have_f = true;
    } else if (key == "g") {
      out.g = parse_poly(val);
    } else {
      throw input_error("unknown key in germ file: '" + key + "'");
    }
  }
  if (!have_f) throw input_error("germ file does not define f");
  return out;
}

}  // namespace mf
