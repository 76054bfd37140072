#pragma once

#include <map>
#include <vector>

#include "milnorfiber/puiseux.hpp"

namespace mf {

// One infinitely near point of the common embedded resolution.
struct ClusterPoint {
  int id = 0;
  int parent = -1;                  // -1 for the origin
  std::vector<int> proximate_to;    // parent plus at most one earlier point
  bool satellite = false;
  long strict_mult_f = 0;           // alpha-weighted strict transform mults
  long strict_mult_g = 0;
  std::vector<int> branches_through;          // instance ids
  std::map<int, long> instance_mult;          // instance id -> multiplicity
};

// An unfolded C-branch: one conjugate member of a branch orbit.
struct BranchInstance {
  int branch = 0;     // index into PairExpansion::branches
  long conj = 0;      // 0 .. orbit_size-1
  int germ = 0;
  long alpha = 1;
  int last_point = -1;  // set by build_cluster: where its arrow attaches
};

struct ClusterTree {
  std::vector<ClusterPoint> points;   // creation order (= blowup order)
  std::vector<BranchInstance> instances;
};

// Builds the minimal common embedded resolution cluster from discrete branch
// data only (multiplicity sequences via characteristic exponents, contact
// records, conjugate splitting profiles).
ClusterTree build_cluster(const std::vector<PuiseuxBranch>& branches,
                          const std::vector<ContactRecord>& contacts);

// Noether sum over shared points for one unfolded pair of chains:
// i0 = sum of m1*m2 over the common infinitely near points, where the chains
// have ramifications e1, e2, characteristic exponents chars1/chars2 and the
// parametrizations diverge at x-exponent `delta`.
long pairwise_intersection(long e1, const std::vector<Rat>& chars1, long e2,
                           const std::vector<Rat>& chars2, const Rat& delta);

// Total Noether sum between two germs in a cluster (alpha-weighted).
long cluster_noether_fg(const ClusterTree& t);

// Divergence exponent of two unfolded instances, from discrete data only.
Rat instance_divergence_from_data(const std::vector<PuiseuxBranch>& branches,
                                  const std::vector<ContactRecord>& contacts, int bi, long ii,
                                  int bj, long ij);

}  // namespace mf
