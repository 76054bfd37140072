#include "milnorfiber/oracles.hpp"

#include <functional>

#include "milnorfiber/pipeline.hpp"
#include "milnorfiber/puiseux.hpp"

namespace mf {

namespace {

long ord_x(const QPoly& p) {
  if (p.is_zero()) throw internal_error("resultant vanished identically");
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (!(p.c[i] == 0)) return static_cast<long>(i);
  throw internal_error("unreachable");
}

// only the origin may be a common zero on the line x = 0
bool line_clean(const BiPoly& F, const BiPoly& G) {
  QPoly a = restrict_x0(F), b = restrict_x0(G);
  if (a.is_zero() || b.is_zero()) return false;
  QPoly d = gcd(a, b);
  for (std::size_t i = 0; i + 1 < d.c.size(); ++i)
    if (!(d.c[i] == 0)) return false;  // gcd not a power of y
  return true;
}

long i0_once(const BiPoly& f, const BiPoly& g, long c) {
  BiPoly F = shear_x(f, c), G = shear_x(g, c);
  if (!line_clean(F, G)) return -1;
  return ord_x(resultant_y(F, G));
}

}  // namespace

long intersection_multiplicity_resultant(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw input_error("i0 of a zero germ");
  if (!f.vanishes_at_origin() || !g.vanishes_at_origin())
    throw input_error("i0 needs germs vanishing at the origin");
  {
    BiPoly d = gcd(f, g);
    if (d.total_degree() > 0) throw input_error("i0 of germs with a common factor");
  }
  std::vector<BiPoly> germs = {f, g};
  long c1 = choose_shear(germs);
  long r1 = i0_once(f, g, c1);
  long c2 = c1;
  long r2 = -1;
  for (int tries = 0; tries < 32; ++tries) {
    c2 = next_shear(germs, c2);
    r2 = i0_once(f, g, c2);
    if (r1 < 0) {
      r1 = r2;
      continue;
    }
    if (r2 >= 0) break;
  }
  if (r1 < 0 || r2 < 0) throw internal_error("could not find clean shears for the resultant");
  if (r1 != r2)
    throw internal_error("resultant orders disagree under two shears: " + std::to_string(r1) +
                         " vs " + std::to_string(r2));
  return r1;
}

long milnor_number(const BiPoly& f) {
  if (f.is_zero()) throw input_error("Milnor number of zero");
  BiPoly fx = d_dx(f), fy = d_dy(f);
  if (fx.is_zero() && fy.is_zero()) throw input_error("constant germ");
  if (!fx.vanishes_at_origin() || !fy.vanishes_at_origin()) return 0;  // smooth germ
  if (fx.is_zero() || fy.is_zero())
    throw input_error("non-isolated singularity (a partial derivative vanishes identically)");
  BiPoly d = gcd(fx, fy);
  if (d.total_degree() > 0)
    throw input_error("non-isolated singularity: gcd(f_x, f_y) = " + print_poly(d));
  return intersection_multiplicity_resultant(fx, fy);
}

ConsistencyReport consistency_report(const BiPoly& f, const BiPoly& g) {
  ConsistencyReport rep;
  rep.input_f = print_poly(f);
  rep.input_g = print_poly(g);
  try {
    PipelineResult P = run_pipeline(f, g, false);

    rep.add("noether_vs_resultant", std::to_string(intersection_multiplicity_resultant(f, g)),
            std::to_string(cluster_noether_fg(P.cluster)));

    std::string detail;
    rep.add("total_transform_vanishing", "ok",
            total_transform_vanishing(P.graph, &detail) ? "ok" : detail);

    Int det = intersection_determinant(P.graph);
    rep.add("determinant_pm1", "1", Int(abs(det)).get_str());
    rep.add("negative_definite", "yes", negative_definite(P.graph) ? "yes" : "no");

    rep.add("chi_equals_valuation", std::to_string(P.chi),
            std::to_string(valuation_at_infinity(P.zeta)));

    rep.add("chi_from_description", std::to_string(P.chi),
            std::to_string(chi_from_description(P.graph, *P.fd, *P.part)));

    // handle ledger
    {
      long total = 0;
      bool framing_ok = true;
      for (const auto& h : P.fd->handles) {
        total += h.count;
        framing_ok = framing_ok && (h.framing == -h.twist);
      }
      long expect = 0;
      for (const auto& a : P.graph.g_arrows) expect += P.graph.vertex(a.attach).m;
      rep.add("handle_ledger", std::to_string(expect) + "/framing",
              std::to_string(total) + (framing_ok ? "/framing" : "/bad-framing"));
    }

    // invariance under one free blowup at a deterministically chosen vertex
    {
      std::size_t h = std::hash<std::string>{}(rep.input_f + "|" + rep.input_g);
      int v = P.graph.vertices[h % P.graph.vertices.size()].id;
      DecoratedGraph g2 = blowup_free_point(P.graph, v);
      Partition p2 = partition(g2);
      bool zeq = zeta_phi(g2, p2) == P.zeta;
      bool ceq = euler_char(g2, p2) == P.chi;
      std::string d2;
      bool tt = total_transform_vanishing(g2, &d2);
      Int det2 = intersection_determinant(g2);
      rep.add("blowup_invariance", "zeta,chi,vanishing,det preserved",
              std::string(zeq ? "zeta" : "ZETA-CHANGED") + "," + (ceq ? "chi" : "CHI-CHANGED") +
                  "," + (tt ? "vanishing" : "VANISHING-BROKEN") + "," +
                  (abs(det2) == abs(det) ? "det preserved" : "DET-CHANGED"));
    }

    if (P.cls->tag == HomotopyCase::CaseI) {
      PipelineResult C = run_pipeline(f, BiPoly{}, true);
      rep.add("case1_zeta_phi_equals_zeta_f", "equal",
              equal_as_rational_functions(P.zeta, C.zeta) ? "equal" : "different");
      // f reduced with isolated singularity: nu = 1 - mu
      bool reduced = true;
      for (const auto& [fac, m] : squarefree_decompose(f))
        if (m > 1) reduced = false;
      if (reduced) {
        try {
          long mu = milnor_number(f);
          rep.add("nu_equals_one_minus_mu", std::to_string(1 - mu),
                  std::to_string(valuation_at_infinity(P.zeta)));
        } catch (const input_error& e) {
          // non-isolated singularity: check skipped, reported as such
          std::string s = std::string("skipped: ") + e.what();
          rep.checks.push_back({"nu_equals_one_minus_mu", s, s, true});
        }
      }
    }
  } catch (const std::exception& e) {
    rep.add_error("pipeline", e.what());
  }
  return rep;
}

}  // namespace mf
