#include <doctest.h>

#include <map>
#include <random>

#include "milnorfiber/bipoly.hpp"

using namespace mf;

namespace {

// Test-local expansion oracle: a tiny independent term-map calculator used to
// freeze expected values for the parser tests.
using TermMap = std::map<std::pair<long, long>, Rat>;

TermMap tm_mul(const TermMap& a, const TermMap& b) {
  TermMap r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto key = std::make_pair(ea.first + eb.first, ea.second + eb.second);
      r[key] += ca * cb;
      if (r[key] == 0) r.erase(key);
    }
  return r;
}

TermMap tm_add(TermMap a, const TermMap& b, const Rat& s) {
  for (const auto& [e, c] : b) {
    a[e] += c * s;
    if (a[e] == 0) a.erase(e);
  }
  return a;
}

// Test-local Sylvester determinant oracle over Q[x] via expansion by minors
// (tiny matrices only).
QPoly syl_det(std::vector<std::vector<QPoly>> M) {
  std::size_t n = M.size();
  if (n == 0) return QPoly::constant(Rat(1));
  if (n == 1) return M[0][0];
  QPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<QPoly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<QPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      sub.push_back(row);
    }
    QPoly term = M[0][j] * syl_det(sub);
    if (j % 2) term = QPoly() - term;
    acc = acc + term;
  }
  return acc;
}

QPoly sylvester_resultant(const BiPoly& p, const BiPoly& q) {
  auto vp = y_coeffs(p), vq = y_coeffs(q);
  long dp = static_cast<long>(vp.size()) - 1, dq = static_cast<long>(vq.size()) - 1;
  std::size_t n = dp + dq;
  std::vector<std::vector<QPoly>> M(n, std::vector<QPoly>(n));
  for (long r = 0; r < dq; ++r)
    for (long k = 0; k <= dp; ++k) M[r][r + k] = vp[dp - k];
  for (long r = 0; r < dp; ++r)
    for (long k = 0; k <= dq; ++k) M[dq + r][r + k] = vq[dq - k];
  return syl_det(M);
}

BiPoly P(const std::string& s) { return parse_poly(s); }

BiPoly random_poly(std::mt19937& rng, int max_deg, int terms) {
  BiPoly p;
  std::uniform_int_distribution<long> de(0, max_deg), dc(-4, 4);
  for (int t = 0; t < terms; ++t) p.add_term(de(rng), de(rng), Rat(dc(rng)));
  return p;
}

}  // namespace

TEST_CASE("parser reads term maps directly") {
  BiPoly p = P("x^2 + y^3");
  CHECK(p.t.size() == 2);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(0, 3) == 1);
  CHECK(P("0").is_zero());
}

TEST_CASE("parser vs independent expansion oracle") {
  // (x+y)^2 - x^2 - 2xy computed by the test-local term calculator
  TermMap xy = {{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}};
  TermMap sq = tm_mul(xy, xy);
  TermMap expect = tm_add(tm_add(sq, {{{2, 0}, Rat(1)}}, Rat(-1)), {{{1, 1}, Rat(1)}}, Rat(-2));
  BiPoly p = P("(x+y)^2 - x^2 - 2*x*y");
  TermMap got(p.t.begin(), p.t.end());
  CHECK(got == expect);
  CHECK(got == TermMap{{{0, 2}, Rat(1)}});
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(P("2x"), parse_error);
  CHECK_THROWS_AS(P("x + z"), parse_error);
  CHECK_THROWS_AS(P("x^"), parse_error);
  CHECK_THROWS_AS(P("(x+y"), parse_error);
  CHECK_THROWS_AS(P(""), parse_error);
  try {
    P("x + z");
  } catch (const parse_error& e) {
    CHECK(e.position() == 4);
  }
  // rationals may carry a sign; variables may not
  CHECK(P("-3*x").coeff(1, 0) == -3);
  CHECK(P("1/2*y").coeff(0, 1) == Rat(1, 2));
  CHECK_THROWS_AS(P("-x"), parse_error);
}

TEST_CASE("print/parse round trip is the identity") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 60; ++i) {
    BiPoly p = random_poly(rng, 6, 5);
    CHECK(parse_poly(print_poly(p)) == p);
  }
  CHECK(print_poly(P("0")) == "0");
  CHECK(parse_poly(print_poly(P("0 - x^2"))) == P("0 - x^2"));
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P("x^2*y"), P("x*y^2")) == P("x*y"));
  CHECK(gcd(P("x^2+y^3"), P("x")).total_degree() == 0);  // irreducible vs line
  BiPoly p = P("2*x^2+2*y^3");
  BiPoly g = gcd(p, p);
  CHECK(g == P("x^2+y^3"));  // normalized: graded-lex lc 1
  CHECK_THROWS_AS(gcd(BiPoly{}, BiPoly{}), input_error);
}

TEST_CASE("squarefree decomposition examples and reassembly") {
  auto d1 = squarefree_decompose(P("(x^2+y^3)^2"));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].first == P("x^2+y^3"));
  CHECK(d1[0].second == 2);

  auto d2 = squarefree_decompose(P("x^2*y^3"));
  REQUIRE(d2.size() == 2);
  CHECK(d2[0].first == P("x"));
  CHECK(d2[0].second == 2);
  CHECK(d2[1].first == P("y"));
  CHECK(d2[1].second == 3);

  auto d3 = squarefree_decompose(P("x^3 + x^2*y - x*y^2 - y^3"));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].first == P("x - y"));
  CHECK(d3[0].second == 1);
  CHECK(d3[1].first == P("x + y"));
  CHECK(d3[1].second == 2);

  // reassembly up to a rational constant, checked by exact multiplication
  std::vector<BiPoly> samples = {P("(x^2+y^3)^2"), P("x^2*y^3"), P("x^3+x^2*y-x*y^2-y^3"),
                                 P("(x+y)^3*(x-y)^2*y"), P("x^5+x^2*y+y^3")};
  for (const auto& p : samples) {
    BiPoly prod = bipoly_const(1);
    for (const auto& [f, m] : squarefree_decompose(p))
      for (int i = 0; i < m; ++i) prod = prod * f;
    Rat scale = graded_lex_lc(p) / graded_lex_lc(prod);
    CHECK(prod * scale == p);
  }
}

TEST_CASE("resultant examples vs the Sylvester determinant oracle") {
  CHECK(resultant_y(P("y - x"), P("y + x")) == sylvester_resultant(P("y - x"), P("y + x")));
  QPoly r = resultant_y(P("y - x"), P("y + x"));
  REQUIRE(r.deg() == 1);
  CHECK(r.c[1] == 2);  // 2x with the Sylvester sign convention
  // Res_y(y^2, x) = x^2
  QPoly r2 = resultant_y(P("y^2"), P("x"));
  CHECK(r2.deg() == 2);
  CHECK(r2.c[2] == 1);
  CHECK(resultant_y(P("x^2+y^3"), P("x^2+y^3")).is_zero());
}

TEST_CASE("resultant vanishes exactly when the gcd has positive y-degree") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 24) {
    BiPoly a = random_poly(rng, 3, 3);
    BiPoly b = random_poly(rng, 3, 3);
    if (a.is_zero() || b.is_zero() || a.deg_y() < 1 || b.deg_y() < 1) continue;
    if (tested % 3 == 0) {
      BiPoly common = P("y + x^2");
      a = a * common;
      b = b * common;
    }
    ++tested;
    bool res_zero = resultant_y(a, b).is_zero();
    bool gcd_ydeg = gcd(a, b).deg_y() > 0;
    CHECK(res_zero == gcd_ydeg);
  }
  // compare against the oracle on small cases
  std::mt19937 rng2(123);
  for (int i = 0; i < 10; ++i) {
    BiPoly a = random_poly(rng2, 2, 3), b = random_poly(rng2, 2, 3);
    if (a.deg_y() < 1 || b.deg_y() < 1) continue;
    CHECK(resultant_y(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("multiplicity at origin") {
  CHECK(multiplicity_at_origin(P("x^2+y^3")) == 2);
  CHECK(multiplicity_at_origin(P("1 + x")) == 0);
  CHECK(multiplicity_at_origin(P("x^2*y^2")) == 4);
  CHECK_THROWS_AS(multiplicity_at_origin(BiPoly{}), input_error);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    BiPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(multiplicity_at_origin(a * b) ==
          multiplicity_at_origin(a) + multiplicity_at_origin(b));
  }
}

TEST_CASE("newton polygon examples") {
  auto e1 = newton_polygon(P("x^2+y^3"));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].slope_num == 3);
  CHECK(e1[0].slope_den == 2);
  CHECK(e1[0].support.size() == 2);

  auto e2 = newton_polygon(P("x + y"));
  REQUIRE(e2.size() == 1);
  CHECK(e2[0].slope_num == 1);
  CHECK(e2[0].slope_den == 1);

  auto e3 = newton_polygon(P("x^5 + x^2*y + y^3"));
  REQUIRE(e3.size() == 2);
  // increasing slope: (5,0)-(2,1) has slope 1/3, then (2,1)-(0,3) slope 1
  CHECK(e3[0].slope_num == 1);
  CHECK(e3[0].slope_den == 3);
  CHECK(e3[1].slope_num == 1);
  CHECK(e3[1].slope_den == 1);

  CHECK_THROWS_AS(newton_polygon(P("1 + x")), input_error);
}

TEST_CASE("newton polygon support lies on the edges, everything else above") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 40; ++i) {
    BiPoly p = random_poly(rng, 6, 6);
    if (p.is_zero() || !p.vanishes_at_origin()) continue;
    auto edges = newton_polygon(p);
    for (const auto& e : edges) {
      REQUIRE(e.support.size() >= 2);
      auto a = e.support.front().first;
      // all support points on the line through a with gradient -num/den
      for (const auto& [pt, c] : e.support)
        CHECK((a.second - pt.second) * e.slope_den == e.slope_num * (pt.first - a.first));
      // every exponent point of p lies weakly above the edge line
      for (const auto& [pt, c] : p.t) {
        long lhs = (pt.second - a.second) * e.slope_den;
        long rhs = -e.slope_num * (pt.first - a.first);
        CHECK(lhs >= rhs);
      }
    }
  }
}
