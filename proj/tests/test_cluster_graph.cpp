#include <doctest.h>

#include "milnorfiber/dualgraph.hpp"
#include "milnorfiber/oracles.hpp"

using namespace mf;

namespace {
BiPoly P(const std::string& s) { return parse_poly(s); }

ClusterTree cluster_of(const std::string& f, const std::string& g, bool curve = false) {
  auto ex = expand_pair(P(f), g.empty() ? BiPoly{} : P(g), curve);
  return build_cluster(ex.branches, ex.contacts);
}

DecoratedGraph graph_of(const std::string& f, const std::string& g, bool curve = false) {
  return to_dual_graph(cluster_of(f, g, curve));
}
}  // namespace

TEST_CASE("transverse smooth pair resolves with a single blowup") {
  auto t = cluster_of("x", "y");
  REQUIRE(t.points.size() == 1);
  CHECK(t.points[0].strict_mult_f == 1);
  CHECK(t.points[0].strict_mult_g == 1);
}

TEST_CASE("the cusp cluster has three points with strict multiplicities 2,1,1") {
  auto t = cluster_of("x^2+y^3", "", true);
  REQUIRE(t.points.size() == 3);
  CHECK(t.points[0].strict_mult_f == 2);
  CHECK(t.points[1].strict_mult_f == 1);
  CHECK(t.points[2].strict_mult_f == 1);
  CHECK(t.points[2].satellite);
  CHECK(t.points[2].proximate_to == std::vector<int>({1, 0}));
  auto ml = divisor_multiplicities(t);
  CHECK(ml[0].first == 2);
  CHECK(ml[1].first == 3);
  CHECK(ml[2].first == 6);
}

TEST_CASE("monomial pair x^d, y^d resolves at one point with m = l = d") {
  for (long d = 2; d <= 4; ++d) {
    auto t = cluster_of("x^" + std::to_string(d), "y^" + std::to_string(d));
    REQUIRE(t.points.size() == 1);
    CHECK(t.points[0].strict_mult_f == d);
    CHECK(t.points[0].strict_mult_g == d);
    auto ml = divisor_multiplicities(t);
    CHECK(ml[0] == std::pair<long, long>(d, d));
  }
}

TEST_CASE("smooth germ resolves with one blowup and m = 1") {
  auto t = cluster_of("x", "", true);
  REQUIRE(t.points.size() == 1);
  auto ml = divisor_multiplicities(t);
  CHECK(ml[0].first == 1);
}

TEST_CASE("cusp dual graph: star over the m=6 vertex, Euler numbers -3,-2,-1") {
  auto g = graph_of("x^2+y^3", "", true);
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.vertex(0).euler == -3);
  CHECK(g.vertex(1).euler == -2);
  CHECK(g.vertex(2).euler == -1);
  CHECK(g.vertex(0).m == 2);
  CHECK(g.vertex(1).m == 3);
  CHECK(g.vertex(2).m == 6);
  CHECK(g.edges == std::vector<std::pair<int, int>>({{0, 2}, {1, 2}}));
  REQUIRE(g.f_arrows.size() == 1);
  CHECK(g.f_arrows[0].attach == 2);
  Int det = intersection_determinant(g);
  CHECK((det == 1 || det == -1));
  CHECK(negative_definite(g));
  CHECK(is_tree(g));
}

TEST_CASE("single-vertex pair graph for x^d / y^d") {
  auto g = graph_of("x^3", "y^3");
  REQUIRE(g.vertices.size() == 1);
  CHECK(g.vertex(0).euler == -1);
  CHECK(g.vertex(0).m == 3);
  CHECK(g.vertex(0).l == 3);
  REQUIRE(g.f_arrows.size() == 1);
  REQUIRE(g.g_arrows.size() == 1);
  CHECK(g.f_arrows[0].alpha == 3);
  CHECK(g.g_arrows[0].alpha == 3);
}

TEST_CASE("total-transform vanishing and unimodularity across a corpus") {
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"x", "y"},           {"x^2+y^3", "x"},       {"x^2+y^3", "x*y"},
      {"x^2+y^4", "x"},     {"x^4+y^4", "x+y"},     {"x^2*y^2", "x+y"},
      {"y^4-x^6", "y"},     {"(x^2+y^3)^2", "x"},   {"x^2+y^3", "x^2+y^5"},
      {"x^3-y^7", "x*y"},   {"(y^2-x^3)^2-x^7", "y"}};
  for (const auto& [fs, gs] : pairs) {
    auto g = graph_of(fs, gs);
    std::string detail;
    CHECK_MESSAGE(total_transform_vanishing(g, &detail), fs, " / ", gs, ": ", detail);
    Int det = intersection_determinant(g);
    CHECK((det == 1 || det == -1));
    CHECK(negative_definite(g));
    CHECK(is_tree(g));
  }
}

TEST_CASE("Noether sums equal the resultant oracle on ten pairs") {
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"x", "y"},
      {"x^2+y^3", "x"},
      {"x^2+y^3", "x^2+y^5"},     // tangential cusps
      {"x^2+y^4", "x^2+y^6"},     // tangential conjugate orbits
      {"x^2+y^4", "x"},
      {"x^2*y^2", "x+y"},
      {"y^4-x^6", "y"},
      {"x^3-y^7", "x*y"},
      {"(y^2-x^3)^2-x^7", "y"},
      {"x^4+y^4", "x+y"},
      {"y^2-x^5", "x^2"},
      {"(x^2+y^3)^2", "x"}};
  for (const auto& [fs, gs] : pairs) {
    auto t = cluster_of(fs, gs);
    CHECK_MESSAGE(cluster_noether_fg(t) == intersection_multiplicity_resultant(P(fs), P(gs)),
                  fs, " / ", gs);
  }
}

TEST_CASE("contact records match the Noether sums of the built cluster") {
  for (const auto& [fs, gs] : std::vector<std::pair<const char*, const char*>>{
           {"x^2+y^3", "x*y"}, {"x^2+y^4", "x"}, {"y^4-x^6", "y"}, {"x^4+y^4", "x+y"},
           {"(y-x^2)*(y+x^2)", "y"}}) {
    auto ex = expand_pair(P(fs), P(gs), false);
    auto t = build_cluster(ex.branches, ex.contacts);
    for (const auto& c : ex.contacts) {
      long noether = 0;
      for (const auto& p : t.points) {
        // sum over instance pairs of the two orbits sharing this point;
        // the double sum over cross pairs factorizes
        long suma = 0, sumb = 0;
        for (int id : p.branches_through) {
          if (t.instances[id].branch == c.b1) suma += p.instance_mult.at(id);
          if (t.instances[id].branch == c.b2) sumb += p.instance_mult.at(id);
        }
        noether += suma * sumb;
      }
      CHECK_MESSAGE(noether == c.intersection_multiplicity, fs, " / ", gs, " pair (", c.b1,
                    ",", c.b2, ")");
    }
  }
}

TEST_CASE("strict multiplicities decompose over branches through each point") {
  auto ex = expand_pair(P("x^2+y^3"), P("x*y"), false);
  auto t = build_cluster(ex.branches, ex.contacts);
  for (const auto& p : t.points) {
    long f = 0, l = 0;
    for (int id : p.branches_through) {
      const auto& inst = t.instances[id];
      long m = p.instance_mult.at(id);
      (inst.germ == 0 ? f : l) += inst.alpha * m;
    }
    CHECK(f == p.strict_mult_f);
    CHECK(l == p.strict_mult_g);
  }
}

TEST_CASE("blowup_free_point adds one vertex and preserves the certificates") {
  auto g = graph_of("x^3", "y^3");
  auto g2 = blowup_free_point(g, 0);
  REQUIRE(g2.vertices.size() == 2);
  const auto& nv = g2.vertex(1);
  CHECK(nv.m == 3);
  CHECK(nv.l == 3);
  CHECK(nv.euler == -1);
  CHECK(g2.vertex(0).euler == -2);
  CHECK(g2.edges == std::vector<std::pair<int, int>>({{0, 1}}));
  std::string d;
  CHECK(total_transform_vanishing(g2, &d));
  Int det = intersection_determinant(g2);
  CHECK((det == 1 || det == -1));
  CHECK_THROWS_AS(blowup_free_point(g, 99), input_error);
}

TEST_CASE("graph validation rejects corrupted graphs") {
  auto g = graph_of("x^2+y^3", "x");
  CHECK_NOTHROW(validate_graph(g));
  auto bad = g;
  bad.vertex(0).m += 1;  // breaks the vanishing certificate
  CHECK_THROWS_AS(validate_graph(bad), input_error);
  auto bad2 = g;
  bad2.edges.clear();  // not a tree anymore
  CHECK_THROWS_AS(validate_graph(bad2), input_error);
}
