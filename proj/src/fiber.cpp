#include "milnorfiber/fiber.hpp"

#include <algorithm>

namespace mf {

bool Partition::in_W1(int v) const {
  return std::binary_search(W1.begin(), W1.end(), v);
}

Partition partition(const DecoratedGraph& g) {
  if (g.g_arrows.empty())
    throw input_error("partition needs a germ pair graph (g-arrows present)");
  Partition p;
  for (const auto& v : g.vertices) {
    if (v.m <= v.l)
      p.W1.push_back(v.id);
    else
      p.W2.push_back(v.id);
  }
  std::sort(p.W1.begin(), p.W1.end());
  std::sort(p.W2.begin(), p.W2.end());
  for (const auto& a : g.f_arrows) {
    if (p.in_W1(a.attach))
      p.A_f1.push_back(a.id);
    else
      p.A_f2.push_back(a.id);
  }
  for (const auto& a : g.g_arrows) {
    if (p.in_W1(a.attach))
      p.A_g1.push_back(a.id);
    else
      p.A_g2.push_back(a.id);
  }
  return p;
}

long delta_f(const DecoratedGraph& g, const Partition&, int w) {
  g.vertex(w);  // existence check
  long d = static_cast<long>(g.neighbors(w).size());
  for (const auto& a : g.f_arrows)
    if (a.attach == w) ++d;
  return d;
}

CycloProduct zeta_phi(const DecoratedGraph& g, const Partition& p) {
  CycloProduct z;
  for (int w : p.W1) {
    long m = g.vertex(w).m;
    long e = delta_f(g, p, w) - 2;
    if (m > 0) z.mul_factor(m, e);
  }
  for (int aid : p.A_g2) {
    const GraphArrow& a = g.g_arrows[aid];
    z.mul_factor(g.vertex(a.attach).m, -1);
  }
  return z;
}

long euler_char(const DecoratedGraph& g, const Partition& p) {
  long chi = 0;
  for (int w : p.W1) chi += g.vertex(w).m * (2 - delta_f(g, p, w));
  for (int aid : p.A_g2) chi += g.vertex(g.g_arrows[aid].attach).m;
  return chi;
}

CycloProduct zeta_acampo(const DecoratedGraph& g) {
  if (!g.g_arrows.empty())
    throw input_error("A'Campo zeta needs a plane-curve mode graph");
  CycloProduct z;
  for (const auto& v : g.vertices) {
    long valence = static_cast<long>(g.neighbors(v.id).size());
    for (const auto& a : g.f_arrows)
      if (a.attach == v.id) ++valence;
    if (v.m > 0) z.mul_factor(v.m, valence - 2);
  }
  return z;
}

FiberDescription fiber_description(const DecoratedGraph& g, const Partition& p) {
  FiberDescription fd;
  fd.region_F1.label = "Tbar_{f,1} \\ T'";
  fd.region_F1.vertices = p.W1;
  fd.region_F1.f_arrows = p.A_f1;
  fd.region_F1.monodromy = "homotopically trivial";
  fd.region_Feps.label = "Tbar_eps";
  fd.region_Feps.monodromy = "equals m_f";
  fd.region_W2.label = "Tbar_2 \\ (T' u T_{g,2})";
  fd.region_W2.vertices = p.W2;
  fd.region_W2.monodromy = "homotopically trivial";

  for (const auto& [a, b] : g.edges) {
    bool a1 = p.in_W1(a), b1 = p.in_W1(b);
    if (a1 != b1) {
      InterfaceCircles ic;
      ic.edge = {a, b};
      ic.count = gcd_long(g.vertex(a).m, g.vertex(b).m);
      fd.interface_circles.push_back(ic);
    }
  }

  for (const auto& a : g.g_arrows) {
    HandleRecord h;
    h.arrow = a.id;
    h.base_vertex = a.attach;
    h.count = g.vertex(a.attach).m;
    h.twist = a.alpha;
    h.framing = -a.alpha;
    bool in2 = std::binary_search(p.A_g2.begin(), p.A_g2.end(), a.id);
    h.monodromy = in2 ? "cyclic permutation of the m_{w_a} handles" : "unspecified";
    fd.handles.push_back(h);
  }
  return fd;
}

long chi_from_description(const DecoratedGraph& g, const FiberDescription& fd,
                          const Partition& p) {
  long chi = 0;
  for (int w : fd.region_F1.vertices) {
    long dfull = static_cast<long>(g.neighbors(w).size());
    for (const auto& a : g.f_arrows)
      if (a.attach == w) ++dfull;
    for (const auto& a : g.g_arrows)
      if (a.attach == w) ++dfull;
    chi += g.vertex(w).m * (2 - dfull);
  }
  for (const auto& h : fd.handles) chi += h.count;
  (void)p;
  return chi;
}

HomotopyClass classify(const DecoratedGraph& g, const Partition& p) {
  HomotopyClass h;
  if (p.W2.empty()) {
    h.tag = HomotopyCase::CaseI;
    h.description =
        "F has the homotopy type of the singular fiber F_{f,sing}; zeta_Phi = zeta_f";
  } else if (p.W1.empty()) {
    h.tag = HomotopyCase::CaseII;
    long m = 0;
    for (const auto& a : g.g_arrows) m += g.vertex(a.attach).m;
    h.bouquet_m = m;
    h.description = "F has the homotopy type of a bouquet of " + std::to_string(m - 1) +
                    " two-spheres (m = " + std::to_string(m) + ")";
  } else {
    h.tag = HomotopyCase::Mixed;
    h.description = "mixed partition: see the fiber description";
  }
  return h;
}

SurgeryRecord boundary_surgery(const FiberDescription& fd) {
  SurgeryRecord r;
  for (const auto& h : fd.handles) {
    SurgeryCurveFamily f;
    f.arrow = h.arrow;
    f.base_vertex = h.base_vertex;
    f.curves = h.count;
    if (h.twist == 0) throw internal_error("g-arrow with zero multiplicity");
    f.coefficient = Rat(1, h.twist);
    f.attach_region = "meridian family at the attach locus of g-arrow " +
                      std::to_string(h.arrow) + " on the boundary of the untwisted region";
    r.families.push_back(f);
  }
  return r;
}

std::vector<CoveringDatum> boundary_covering_data(const DecoratedGraph& g) {
  if (!g.g_arrows.empty())
    throw input_error("boundary covering data needs a plane-curve mode graph");
  std::vector<CoveringDatum> out;
  for (const auto& a : g.f_arrows) {
    CoveringDatum d;
    d.arrow = a.id;
    d.attach = a.attach;
    long m = g.vertex(a.attach).m;
    d.components = gcd_long(a.alpha, m);
    d.degree = a.alpha / d.components;
    out.push_back(d);
  }
  return out;
}

}  // namespace mf
