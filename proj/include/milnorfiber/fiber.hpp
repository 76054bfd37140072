#pragma once

#include <string>
#include <vector>

#include "milnorfiber/cyclo.hpp"
#include "milnorfiber/dualgraph.hpp"

namespace mf {

// W1 = {w : m_w <= l_w}, W2 = W \ W1; arrows follow their attach vertex.
struct Partition {
  std::vector<int> W1, W2;          // vertex ids, sorted
  std::vector<int> A_f1, A_f2;      // f-arrow ids
  std::vector<int> A_g1, A_g2;      // g-arrow ids

  bool in_W1(int v) const;
};

Partition partition(const DecoratedGraph& g);

// Number of neighbors of w in W u A_f (non-arrow neighbors plus f-arrows).
long delta_f(const DecoratedGraph& g, const Partition& p, int w);

// zeta_Phi = prod_{w in W1} (1-t^(m_w))^(delta_{w,f}-2)
//          * prod_{a in A_{g,2}} (1-t^(m_{w_a}))^(-1)
CycloProduct zeta_phi(const DecoratedGraph& g, const Partition& p);

// chi(F_Phi) = sum_{w in W1} m_w (2 - delta_{w,f}) + sum_{a in A_{g,2}} m_{w_a}
long euler_char(const DecoratedGraph& g, const Partition& p);

// Plane-curve mode: prod over all vertices of (1-t^(m_w))^(valence-2).
CycloProduct zeta_acampo(const DecoratedGraph& g);

struct HandleRecord {
  int arrow = 0;       // g-arrow id
  int base_vertex = 0; // w_a
  long count = 0;      // m_{w_a}
  long twist = 0;      // l_a = alpha of the g-arrow
  long framing = 0;    // -twist
  std::string monodromy;
};

struct FiberRegion {
  std::string label;
  std::vector<int> vertices;
  std::vector<int> f_arrows;
  std::string monodromy;
};

struct InterfaceCircles {
  std::pair<int, int> edge;  // W1-W2 edge
  long count = 0;            // gcd(m_{w1}, m_{w2})
};

struct FiberDescription {
  FiberRegion region_F1;    // W1 with its f-arrows
  FiberRegion region_Feps;  // the Milnor-fiber piece carrying F_f
  FiberRegion region_W2;
  std::vector<InterfaceCircles> interface_circles;
  std::vector<HandleRecord> handles;
};

FiberDescription fiber_description(const DecoratedGraph& g, const Partition& p);

// Independent Euler characteristic route:
// sum_{w in W1} m_w (2 - delta_w^full) + sum_{a in A_g} m_{w_a},
// where delta^full counts every neighbor including g-arrows.
long chi_from_description(const DecoratedGraph& g, const FiberDescription& fd,
                          const Partition& p);

enum class HomotopyCase { CaseI, CaseII, Mixed };

struct HomotopyClass {
  HomotopyCase tag = HomotopyCase::Mixed;
  long bouquet_m = 0;  // Case II: fiber ~ wedge of (m-1) two-spheres
  std::string description;
};

HomotopyClass classify(const DecoratedGraph& g, const Partition& p);

struct SurgeryCurveFamily {
  int arrow = 0;
  int base_vertex = 0;
  long curves = 0;          // m_{w_a} meridian curves
  Rat coefficient;          // 1/l_a
  std::string attach_region;
};

struct SurgeryRecord {
  std::vector<SurgeryCurveFamily> families;
};

SurgeryRecord boundary_surgery(const FiberDescription& fd);

struct CoveringDatum {
  int arrow = 0;
  int attach = 0;
  long components = 0;  // gcd(alpha_a, m_{w_a})
  long degree = 0;      // alpha_a / components
};

// Plane-curve mode boundary covering data, one record per f-arrow.
std::vector<CoveringDatum> boundary_covering_data(const DecoratedGraph& g);

}  // namespace mf
