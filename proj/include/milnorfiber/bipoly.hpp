#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "milnorfiber/upoly.hpp"

namespace mf {

// Exact bivariate polynomial over Q. Canonical: the term map holds no zero
// coefficients, so equal polynomials have identical maps.
struct BiPoly {
  std::map<std::pair<long, long>, Rat> t;  // (x-exp, y-exp) -> coefficient

  bool is_zero() const { return t.empty(); }
  bool vanishes_at_origin() const { return t.find({0, 0}) == t.end(); }
  Rat coeff(long i, long j) const {
    auto it = t.find({i, j});
    return it == t.end() ? Rat(0) : it->second;
  }
  void add_term(long i, long j, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = t.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  long total_degree() const;
  long deg_y() const;
  long deg_x() const;

  bool operator==(const BiPoly& o) const { return t == o.t; }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const Rat& s);

BiPoly bipoly_x();
BiPoly bipoly_y();
BiPoly bipoly_const(const Rat& c);

// Input grammar (see README): expr := term (('+'|'-') term)*;
// term := factor ('*' factor)*; factor := base ('^' natural)?;
// base := 'x' | 'y' | rational | '(' expr ')'. No implicit multiplication.
BiPoly parse_poly(const std::string& text);

// Canonical printer: graded lexicographic (x before y), highest term first.
// parse_poly(print_poly(p)) == p.
std::string print_poly(const BiPoly& p);

// Derivatives and substitutions.
BiPoly d_dx(const BiPoly& p);
BiPoly d_dy(const BiPoly& p);
BiPoly shear_x(const BiPoly& p, long c);  // x <- x + c*y
BiPoly swap_xy(const BiPoly& p);

// GCD, primitive, with the graded-lex leading coefficient normalized to 1.
BiPoly gcd(const BiPoly& p, const BiPoly& q);

// Square-free decomposition: p ~ prod factor^mult up to a rational constant;
// factors pairwise coprime, square-free, normalized, sorted canonically.
std::vector<std::pair<BiPoly, int>> squarefree_decompose(const BiPoly& p);

BiPoly squarefree_part(const BiPoly& p);

// Exact division (throws internal_error if q does not divide p).
BiPoly divide_exact(const BiPoly& p, const BiPoly& q);

// Resultant with respect to y (Sylvester convention), exact in Q[x].
QPoly resultant_y(const BiPoly& p, const BiPoly& q);

// min(i + j) over stored terms; p must be nonzero.
long multiplicity_at_origin(const BiPoly& p);

struct NewtonPolygonEdge {
  // slope p/q > 0: along the edge j drops by p while i grows by q
  // (the edge line has gradient -p/q in the (i, j) plane).
  long slope_num, slope_den;
  std::vector<std::pair<std::pair<long, long>, Rat>> support;  // ((i,j),coeff)
};

// Compact edges of the lower-left Newton polygon, increasing slope.
// Pre: p nonzero, p(0,0) = 0.
std::vector<NewtonPolygonEdge> newton_polygon(const BiPoly& p);

// Leading coefficient in graded lex (x before y, highest first).
Rat graded_lex_lc(const BiPoly& p);

// y-coefficient view: result[j] = coefficient of y^j as a polynomial in x.
std::vector<QPoly> y_coeffs(const BiPoly& p);
BiPoly from_y_coeffs(const std::vector<QPoly>& v);

BiPoly eval_y_const(const BiPoly& p, const Rat& y0);  // p(x, y0) as BiPoly in x
QPoly restrict_y0(const BiPoly& p);                   // p(x, 0)
QPoly restrict_x0(const BiPoly& p);                   // p(0, y)

}  // namespace mf
