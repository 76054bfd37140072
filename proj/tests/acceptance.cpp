// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "milnorfiber/jsonio.hpp"

using namespace mf;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int n, bool ok, const std::string& what, double ms) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "  ["
            << static_cast<long>(ms) << " ms]\n";
  if (!ok) ++failures;
}

BiPoly P(const std::string& s) { return parse_poly(s); }

CycloProduct one_factor(long k, long e) {
  CycloProduct z;
  z.mul_factor(k, e);
  return z;
}

std::vector<std::pair<BiPoly, BiPoly>> load_corpus() {
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(MF_CORPUS_DIR))
    if (e.path().extension() == ".germ") entries.push_back(e.path());
  std::sort(entries.begin(), entries.end());
  std::vector<std::pair<BiPoly, BiPoly>> out;
  for (const auto& p : entries) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    auto gp = parse_germ_file(ss.str());
    out.emplace_back(gp.f, gp.g.value());
  }
  return out;
}

}  // namespace

int main() {
  // 1. Paper example f = x^d, g = y^d for d = 2..6.
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (long d = 2; d <= 6 && ok; ++d) {
      Timer per;
      auto r = run_pipeline(P("x^" + std::to_string(d)), P("y^" + std::to_string(d)), false);
      ok = ok && r.graph.vertices.size() == 1;
      ok = ok && r.graph.vertices[0].m == d && r.graph.vertices[0].l == d;
      ok = ok && r.cls->tag == HomotopyCase::CaseI;
      ok = ok && r.chi == d;
      ok = ok && r.zeta == one_factor(d, -1);
      ok = ok && per.ms() < 1000.0;
      if (!ok) why = "failed at d = " + std::to_string(d);
    }
    report(1, ok,
           "monomial pair x^d / y^d, d=2..6: one vertex m=l=d, CaseI, chi=d, "
           "zeta=(1-t^d)^-1 (Example zeta discrepancy flagged in metadata). " + why,
           t.ms());
  }

  // 2. Cusp A'Campo anchor.
  {
    Timer t;
    auto r = run_pipeline(P("x^2+y^3"), BiPoly{}, true);
    bool ok = r.graph.vertices.size() == 3;
    std::vector<long> ms;
    for (const auto& v : r.graph.vertices) ms.push_back(v.m);
    std::sort(ms.begin(), ms.end());
    ok = ok && ms == std::vector<long>({2, 3, 6});
    CycloProduct expect;
    expect.mul_factor(6, 1);
    expect.mul_factor(2, -1);
    expect.mul_factor(3, -1);
    ok = ok && r.zeta == expect;
    ok = ok && valuation_at_infinity(r.zeta) == -1;
    long mu = milnor_number(P("x^2+y^3"));
    ok = ok && mu == 2 && 1 - mu == valuation_at_infinity(r.zeta);
    ok = ok && t.ms() < 1000.0;
    report(2, ok, "cusp x^2+y^3: multiplicities (2,3,6), zeta_f=(1-t^6)(1-t^2)^-1(1-t^3)^-1, "
                  "nu = -1 = 1 - mu",
           t.ms());
  }

  // 3. Case II anchor f = x^2 y^2, g = x + y.
  {
    Timer t;
    auto r = run_pipeline(P("x^2*y^2"), P("x+y"), false);
    bool ok = r.part->W1.empty();
    ok = ok && r.cls->tag == HomotopyCase::CaseII && r.cls->bouquet_m == 4;
    ok = ok && r.chi == 4;
    ok = ok && r.zeta == one_factor(4, -1);
    ok = ok && t.ms() < 1000.0;
    report(3, ok, "x^2y^2 / x+y: W1 empty, m=4, chi=4, zeta=(1-t^4)^-1, bouquet of 3 spheres",
           t.ms());
  }

  // 4. chi = nu(zeta) over the corpus.
  {
    Timer t;
    auto corpus = load_corpus();
    bool ok = corpus.size() >= 15;
    std::string why = ok ? "" : "corpus too small";
    int caseI = 0, caseII = 0, mixed = 0;
    for (const auto& [f, g] : corpus) {
      auto r = run_pipeline(f, g, false);
      if (r.chi != valuation_at_infinity(r.zeta)) {
        ok = false;
        why = "chi != nu for f = " + print_poly(f);
      }
      switch (r.cls->tag) {
        case HomotopyCase::CaseI: ++caseI; break;
        case HomotopyCase::CaseII: ++caseII; break;
        case HomotopyCase::Mixed: ++mixed; break;
      }
    }
    ok = ok && caseI > 0 && caseII > 0 && mixed > 0;
    ok = ok && t.ms() < 30000.0;
    std::ostringstream what;
    what << "chi = nu(zeta) on all " << corpus.size() << " corpus entries (CaseI " << caseI
         << ", CaseII " << caseII << ", Mixed " << mixed << ") " << why;
    report(4, ok, what.str(), t.ms());
  }

  // 5. Resolution independence under one free blowup at every vertex.
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (const auto& [f, g] : load_corpus()) {
      auto r = run_pipeline(f, g, false);
      for (const auto& v : r.graph.vertices) {
        auto g2 = blowup_free_point(r.graph, v.id);
        auto p2 = partition(g2);
        if (!(zeta_phi(g2, p2) == r.zeta) || euler_char(g2, p2) != r.chi) {
          ok = false;
          why = "changed at vertex " + std::to_string(v.id) + " of f = " + print_poly(f);
        }
      }
    }
    ok = ok && t.ms() < 30000.0;
    report(5, ok, "zeta exponent map and chi unchanged under every free blowup " + why, t.ms());
  }

  // 6. Noether = resultant on the corpus (includes tangential pairs).
  {
    Timer t;
    bool ok = true;
    std::string why;
    long count = 0;
    for (const auto& [f, g] : load_corpus()) {
      auto ex = expand_pair(f, g, false);
      auto cl = build_cluster(ex.branches, ex.contacts);
      ++count;
      if (cluster_noether_fg(cl) != intersection_multiplicity_resultant(f, g)) {
        ok = false;
        why = "mismatch for f = " + print_poly(f) + ", g = " + print_poly(g);
      }
    }
    ok = ok && count >= 10;
    report(6, ok,
           "cluster Noether sum = resultant order on " + std::to_string(count) + " pairs " + why,
           t.ms());
  }

  // 7. Linear-algebra certificate on every produced graph.
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (const auto& [f, g] : load_corpus()) {
      auto r = run_pipeline(f, g, false);
      std::string detail;
      if (!total_transform_vanishing(r.graph, &detail)) {
        ok = false;
        why = detail;
      }
      Int det = intersection_determinant(r.graph);
      if (det != 1 && det != -1) {
        ok = false;
        why = "determinant " + det.get_str();
      }
      if (!negative_definite(r.graph)) {
        ok = false;
        why = "not negative definite";
      }
    }
    report(7, ok, "total-transform vanishing and det = +-1 on every corpus graph " + why, t.ms());
  }

  // 8. chi_from_description = euler_char on the corpus.
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (const auto& [f, g] : load_corpus()) {
      auto r = run_pipeline(f, g, false);
      if (chi_from_description(r.graph, *r.fd, *r.part) != r.chi) {
        ok = false;
        why = "mismatch for f = " + print_poly(f);
      }
    }
    report(8, ok, "independent handle-count chi equals the Corollary formula " + why, t.ms());
  }

  // 9. Boundary covering data.
  {
    Timer t;
    auto r1 = run_pipeline(P("(x^2+y^3)^2"), BiPoly{}, true);
    bool ok = r1.coverings.size() == 1 && r1.coverings[0].components == 2 &&
              r1.coverings[0].degree == 1;
    auto r2 = run_pipeline(P("x^2+y^3"), BiPoly{}, true);
    ok = ok && r2.coverings.size() == 1 && r2.coverings[0].components == 1 &&
         r2.coverings[0].degree == 1;
    report(9, ok, "(x^2+y^3)^2 gives 2 components of degree 1; x^2+y^3 gives 1 of degree 1",
           t.ms());
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: failures present\n");
  return failures;
}
