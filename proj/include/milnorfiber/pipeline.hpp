#pragma once

#include <optional>
#include <string>

#include "milnorfiber/fiber.hpp"

namespace mf {

// End-to-end result for one germ (pair): expansion, cluster, graph and all
// fiber invariants. Plane-curve mode fills the A'Campo side only.
struct PipelineResult {
  BiPoly f, g;
  bool curve_only = false;
  long shear = 1;
  PairExpansion expansion;
  ClusterTree cluster;
  DecoratedGraph graph;

  // pair mode
  std::optional<Partition> part;
  CycloProduct zeta;  // zeta_Phi, or zeta_f (A'Campo) in curve mode
  long chi = 0;       // euler_char, or valuation of zeta_f in curve mode
  std::optional<HomotopyClass> cls;
  std::optional<FiberDescription> fd;
  std::optional<SurgeryRecord> surgery;

  // curve mode
  std::vector<CoveringDatum> coverings;
};

PipelineResult run_pipeline(const BiPoly& f, const BiPoly& g, bool curve_only);

// Invariants computed from an ingested graph (graph-direct mode).
PipelineResult invariants_from_graph(const DecoratedGraph& graph);

// Two-line germ pair file: "f = <poly>" / "g = <poly>" (g line optional).
struct GermPairFile {
  BiPoly f;
  std::optional<BiPoly> g;
};
GermPairFile parse_germ_file(const std::string& text);

}  // namespace mf
