#pragma once

#include <utility>
#include <vector>

#include "milnorfiber/cluster.hpp"

namespace mf {

struct GraphVertex {
  int id = 0;
  long m = 0;      // multiplicity of f on the divisor
  long l = 0;      // multiplicity of g on the divisor
  long euler = -1;
};

struct GraphArrow {
  int id = 0;
  int attach = 0;
  long alpha = 1;
};

// Decorated dual resolution graph. Plane-curve mode is the same structure
// with no g-arrows (and l identically zero).
struct DecoratedGraph {
  std::vector<GraphVertex> vertices;          // sorted by id
  std::vector<std::pair<int, int>> edges;     // a < b, sorted
  std::vector<GraphArrow> f_arrows, g_arrows;

  const GraphVertex& vertex(int id) const;
  GraphVertex& vertex(int id);
  std::vector<int> neighbors(int id) const;   // non-arrow neighbors
  bool curve_mode() const { return g_arrows.empty(); }
};

// m / l values per cluster point by the proximity recursion.
std::vector<std::pair<long, long>> divisor_multiplicities(const ClusterTree& t);

DecoratedGraph to_dual_graph(const ClusterTree& t);

// Adds one free blowup at vertex v: new vertex with the same (m, l), Euler
// number -1, an edge to v; v's Euler number drops by one.
DecoratedGraph blowup_free_point(const DecoratedGraph& g, int v);

// Certificates.
bool total_transform_vanishing(const DecoratedGraph& g, std::string* detail = nullptr);
Int intersection_determinant(const DecoratedGraph& g);
bool negative_definite(const DecoratedGraph& g);
bool is_tree(const DecoratedGraph& g);

// Structural validation used when a graph is ingested from a file.
void validate_graph(const DecoratedGraph& g);

}  // namespace mf
