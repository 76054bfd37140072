#include "milnorfiber/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mf {

long BiPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first + e.second);
  return d;
}

long BiPoly::deg_y() const {
  long d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.second);
  return d;
}

long BiPoly::deg_x() const {
  long d = -1;
  for (const auto& [e, c] : t) d = std::max(d, e.first);
  return d;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.t) r.add_term(e.first, e.second, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly operator*(const BiPoly& a, const Rat& s) {
  BiPoly r;
  if (s == 0) return r;
  for (const auto& [e, c] : a.t) r.t[e] = c * s;
  return r;
}

BiPoly bipoly_x() {
  BiPoly p;
  p.t[{1, 0}] = 1;
  return p;
}
BiPoly bipoly_y() {
  BiPoly p;
  p.t[{0, 1}] = 1;
  return p;
}
BiPoly bipoly_const(const Rat& c) {
  BiPoly p;
  if (c != 0) p.t[{0, 0}] = c;
  return p;
}

// ------------------------------------------------------------------ parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int read_natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number", start);
    return Int(s.substr(start, pos - start));
  }

  Rat read_rational() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw parse_error("a sign must be followed by digits", start);
    }
    Int num = read_natural();
    Int den(1);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t dstart = pos;
      den = read_natural();
      if (den == 0) throw parse_error("zero denominator", dstart);
    }
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  BiPoly parse_base() {
    char c = peek();
    if (c == 'x') {
      ++pos;
      return bipoly_x();
    }
    if (c == 'y') {
      ++pos;
      return bipoly_y();
    }
    if (c == '(') {
      ++pos;
      BiPoly e = parse_expr();
      if (!eat(')')) throw parse_error("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
      return bipoly_const(read_rational());
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw parse_error(std::string("unknown variable '") + c + "' (only x and y are allowed)", pos);
    throw parse_error("expected 'x', 'y', a rational, or '('", pos);
  }

  BiPoly parse_factor() {
    BiPoly b = parse_base();
    if (peek() == '^') {
      ++pos;
      std::size_t epos = pos;
      Int n = read_natural();
      if (!n.fits_ulong_p() || n > 4096) throw parse_error("exponent out of range", epos);
      unsigned long e = n.get_ui();
      BiPoly r = bipoly_const(1);
      BiPoly base = b;
      while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
      }
      return r;
    }
    return b;
  }

  BiPoly parse_term() {
    BiPoly r = parse_factor();
    while (peek() == '*') {
      ++pos;
      r = r * parse_factor();
    }
    return r;
  }

  BiPoly parse_expr() {
    BiPoly r = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = r + parse_term();
      } else if (c == '-') {
        ++pos;
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }
};

}  // namespace

BiPoly parse_poly(const std::string& text) {
  Parser p(text);
  BiPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw parse_error("unexpected trailing input", p.pos);
  return r;
}

// ----------------------------------------------------------------- printer

namespace {

// graded lex, x before y, highest first
bool term_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
  long da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da > db;
  return a.first > b.first;
}

std::string monomial_str(long i, long j) {
  std::string s;
  if (i > 0) {
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s;
}

}  // namespace

std::string print_poly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::pair<long, long>, Rat>> terms(p.t.begin(), p.t.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return term_less(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat mag = abs(c);
    bool neg = c < 0;
    std::string mono = monomial_str(e.first, e.second);
    std::string coef;
    if (mono.empty())
      coef = mag.get_str();
    else if (mag == 1)
      coef = "";
    else
      coef = mag.get_str();
    std::string body = coef;
    if (!mono.empty()) {
      if (!coef.empty()) body += "*";
      body += mono;
    }
    if (first) {
      if (neg) {
        // "-x" is not in the grammar; attach the sign to an explicit numeral.
        if (coef.empty())
          out += "-1*" + mono;
        else
          out += "-" + body;
      } else {
        out += body;
      }
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ------------------------------------------------------- calculus & algebra

BiPoly d_dx(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.t)
    if (e.first > 0) r.add_term(e.first - 1, e.second, c * Rat(e.first));
  return r;
}

BiPoly d_dy(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.t)
    if (e.second > 0) r.add_term(e.first, e.second - 1, c * Rat(e.second));
  return r;
}

BiPoly shear_x(const BiPoly& p, long c) {
  // x <- x + c*y
  BiPoly r;
  for (const auto& [e, co] : p.t) {
    // (x + c y)^i = sum_k C(i,k) c^k x^(i-k) y^k
    Int binom(1);
    Int cpow(1);
    for (long k = 0; k <= e.first; ++k) {
      if (k > 0) {
        binom = binom * (e.first - k + 1) / k;
        cpow *= c;
      }
      r.add_term(e.first - k, e.second + k, co * Rat(binom) * Rat(cpow));
    }
  }
  return r;
}

BiPoly swap_xy(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.t) r.t[{e.second, e.first}] = c;
  return r;
}

Rat graded_lex_lc(const BiPoly& p) {
  if (p.is_zero()) throw internal_error("leading coefficient of zero");
  auto best = p.t.begin();
  for (auto it = p.t.begin(); it != p.t.end(); ++it)
    if (term_less(it->first, best->first)) best = it;
  return best->second;
}

std::vector<QPoly> y_coeffs(const BiPoly& p) {
  std::vector<QPoly> v(static_cast<std::size_t>(std::max<long>(p.deg_y() + 1, 0)));
  for (const auto& [e, c] : p.t) {
    auto& q = v[e.second];
    if (q.c.size() <= static_cast<std::size_t>(e.first)) q.c.resize(e.first + 1, Rat(0));
    q.c[e.first] = c;
  }
  for (auto& q : v) q.trim();
  return v;
}

BiPoly from_y_coeffs(const std::vector<QPoly>& v) {
  BiPoly r;
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < v[j].c.size(); ++i)
      r.add_term(static_cast<long>(i), static_cast<long>(j), v[j].c[i]);
  return r;
}

QPoly restrict_y0(const BiPoly& p) {
  QPoly q;
  for (const auto& [e, c] : p.t)
    if (e.second == 0) {
      if (q.c.size() <= static_cast<std::size_t>(e.first)) q.c.resize(e.first + 1, Rat(0));
      q.c[e.first] = c;
    }
  q.trim();
  return q;
}

QPoly restrict_x0(const BiPoly& p) {
  QPoly q;
  for (const auto& [e, c] : p.t)
    if (e.first == 0) {
      if (q.c.size() <= static_cast<std::size_t>(e.second)) q.c.resize(e.second + 1, Rat(0));
      q.c[e.second] = c;
    }
  q.trim();
  return q;
}

BiPoly eval_y_const(const BiPoly& p, const Rat& y0) {
  BiPoly r;
  for (const auto& [e, c] : p.t) r.add_term(e.first, 0, c * rat_pow(y0, e.second));
  return r;
}

namespace {

// content of p with respect to y: gcd in Q[x] of the y-coefficients (monic)
QPoly content_y(const BiPoly& p) {
  QPoly g;
  for (const auto& q : y_coeffs(p)) {
    if (q.is_zero()) continue;
    g = g.is_zero() ? monic(q) : gcd(g, q);
    if (g.deg() == 0) break;
  }
  return g;
}

// pseudo-remainder of a by b with respect to y (coefficients in Q[x])
std::vector<QPoly> prem_y(std::vector<QPoly> a, const std::vector<QPoly>& b) {
  long da = static_cast<long>(a.size()) - 1;
  long db = static_cast<long>(b.size()) - 1;
  const QPoly& lb = b.back();
  while (da >= db && !(da < 0)) {
    // a = a*lb - lead(a)*b*y^(da-db)
    QPoly la = a[da];
    if (la.is_zero()) {
      a.pop_back();
      --da;
      continue;
    }
    for (auto& q : a) q = q * lb;
    for (long i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    da = static_cast<long>(a.size()) - 1;
  }
  return a;
}

BiPoly primitive_y(const BiPoly& p) {
  QPoly c = content_y(p);
  if (c.deg() <= 0) return p;
  auto v = y_coeffs(p);
  for (auto& q : v)
    if (!q.is_zero()) q = q / c;
  return from_y_coeffs(v);
}

BiPoly normalize_lc(const BiPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rat(1) / graded_lex_lc(p));
}

}  // namespace

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw input_error("gcd(0, 0) is undefined");
  if (p.is_zero()) return normalize_lc(q);
  if (q.is_zero()) return normalize_lc(p);

  // Split into y-content (in Q[x]) and y-primitive part; combine the gcds.
  QPoly cp = content_y(p), cq = content_y(q);
  QPoly cg = gcd(cp, cq);
  BiPoly a = primitive_y(p), b = primitive_y(q);

  // Primitive PRS in y.
  std::vector<QPoly> va = y_coeffs(a), vb = y_coeffs(b);
  if (va.size() < vb.size()) std::swap(va, vb);
  while (true) {
    if (vb.empty()) break;
    if (vb.size() == 1) {
      // gcd of primitives is a constant
      va.clear();
      va.push_back(monic(QPoly::constant(Rat(1))));
      vb.clear();
      break;
    }
    auto r = prem_y(va, vb);
    va = std::move(vb);
    vb = std::move(r);
    if (!vb.empty()) {
      BiPoly rb = primitive_y(from_y_coeffs(vb));
      vb = y_coeffs(rb);
    }
  }
  BiPoly prim_gcd = primitive_y(from_y_coeffs(va));
  BiPoly result = prim_gcd;
  // multiply by the content gcd
  BiPoly cgb;
  for (std::size_t i = 0; i < cg.c.size(); ++i) cgb.add_term(static_cast<long>(i), 0, cg.c[i]);
  result = result * cgb;
  return normalize_lc(result);
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw internal_error("divide_exact by zero");
  if (p.is_zero()) return {};
  if (q.deg_y() == 0) {
    QPoly d = restrict_y0(q);
    auto v = y_coeffs(p);
    for (auto& c : v) {
      if (c.is_zero()) continue;
      auto [quot, rem] = divmod(c, d);
      if (!rem.is_zero()) throw internal_error("divide_exact: not divisible");
      c = quot;
    }
    return from_y_coeffs(v);
  }
  // long division in y over Q(x): lc^k * p = Q * q, then Q / lc^k
  std::vector<QPoly> a = y_coeffs(p), b = y_coeffs(q);
  const QPoly& lb = b.back();
  long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
  if (da < db) throw internal_error("divide_exact: degree too small");
  std::vector<QPoly> quot(da - db + 1);
  long k = 0;
  while (da >= db) {
    QPoly la = a.empty() ? QPoly() : a.back();
    if (la.is_zero()) {
      a.pop_back();
      --da;
      continue;
    }
    // fraction-free step: a <- lb*a - la*b*y^(da-db), quot <- lb*quot + la*y^(da-db)
    for (auto& c : a) c = c * lb;
    for (auto& c : quot) c = c * lb;
    ++k;
    quot[da - db] = quot[da - db] + la;
    for (long i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - la * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    da = static_cast<long>(a.size()) - 1;
  }
  if (!a.empty()) throw internal_error("divide_exact: remainder nonzero");
  // quot currently equals lb^k * true quotient; divide it out.
  QPoly lbk = QPoly::constant(Rat(1));
  for (long i = 0; i < k; ++i) lbk = lbk * lb;
  for (auto& c : quot) {
    if (c.is_zero()) continue;
    auto [qq, rr] = divmod(c, lbk);
    if (!rr.is_zero()) throw internal_error("divide_exact: scaling failed");
    c = qq;
  }
  return from_y_coeffs(quot);
}

std::vector<std::pair<BiPoly, int>> squarefree_decompose(const BiPoly& p) {
  if (p.is_zero()) throw input_error("square-free decomposition of zero");
  std::vector<std::pair<BiPoly, int>> out;

  // y-content (pure-x part) via univariate Yun, then the y-primitive part.
  QPoly cy = content_y(p);
  if (cy.deg() > 0) {
    for (auto& [f, m] : squarefree_decomposition(cy)) {
      BiPoly fb;
      for (std::size_t i = 0; i < f.c.size(); ++i) fb.add_term(static_cast<long>(i), 0, f.c[i]);
      out.emplace_back(normalize_lc(fb), m);
    }
  }
  BiPoly a = primitive_y(p);
  if (a.deg_y() > 0) {
    // Square-free chain with respect to y.
    BiPoly g = gcd(a, d_dy(a));
    BiPoly w = divide_exact(a, g);
    int mult = 1;
    while (w.total_degree() > 0) {
      BiPoly y = gcd(w, g);
      BiPoly fac = divide_exact(w, y);
      if (fac.total_degree() > 0) out.emplace_back(normalize_lc(fac), mult);
      w = y;
      g = divide_exact(g, y);
      ++mult;
    }
  } else if (a.total_degree() > 0 && cy.deg() <= 0) {
    out.emplace_back(normalize_lc(a), 1);
  }

  std::sort(out.begin(), out.end(), [](const auto& A, const auto& B) {
    if (A.second != B.second) return A.second < B.second;
    return print_poly(A.first) < print_poly(B.first);
  });
  return out;
}

BiPoly squarefree_part(const BiPoly& p) {
  BiPoly r = bipoly_const(1);
  for (const auto& [f, m] : squarefree_decompose(p)) r = r * f;
  return normalize_lc(r);
}

QPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  long dp = p.deg_y(), dq = q.deg_y();
  if (dp == 0 && dq == 0) return QPoly::constant(Rat(1));
  if (dp == 0) {
    // Res_y(c(x), q) = c(x)^deg_y(q)
    QPoly c = restrict_y0(p);
    QPoly r = QPoly::constant(Rat(1));
    for (long i = 0; i < dq; ++i) r = r * c;
    return r;
  }
  if (dq == 0) {
    QPoly c = restrict_y0(q);
    QPoly r = QPoly::constant(Rat(1));
    for (long i = 0; i < dp; ++i) r = r * c;
    return r;
  }

  auto vp = y_coeffs(p), vq = y_coeffs(q);
  const QPoly &lp = vp.back(), &lq = vq.back();
  long bound = p.deg_x() * dq + q.deg_x() * dp;

  std::vector<Rat> xs;
  std::vector<Rat> ys;
  long x0 = 0;
  while (static_cast<long>(xs.size()) <= bound) {
    Rat xv(x0++);
    if (eval(lp, xv) == 0 || eval(lq, xv) == 0) continue;  // degree would drop
    UPoly<Rat> pe, qe;
    pe.c.resize(vp.size());
    for (std::size_t j = 0; j < vp.size(); ++j) pe.c[j] = eval(vp[j], xv);
    pe.trim();
    qe.c.resize(vq.size());
    for (std::size_t j = 0; j < vq.size(); ++j) qe.c[j] = eval(vq[j], xv);
    qe.trim();
    xs.push_back(xv);
    ys.push_back(resultant(pe, qe));
  }
  // Lagrange interpolation over Q.
  QPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly li = QPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      QPoly lin;
      lin.c = {-xs[j], Rat(1)};
      li = li * lin;
      denom *= xs[i] - xs[j];
    }
    acc = acc + li * Rat(ys[i] / denom);
  }
  return acc;
}

long multiplicity_at_origin(const BiPoly& p) {
  if (p.is_zero()) throw input_error("multiplicity of the zero polynomial");
  long m = -1;
  for (const auto& [e, c] : p.t) {
    long d = e.first + e.second;
    if (m < 0 || d < m) m = d;
  }
  return m;
}

std::vector<NewtonPolygonEdge> newton_polygon(const BiPoly& p) {
  if (p.is_zero()) throw input_error("Newton polygon of zero");
  if (!p.vanishes_at_origin()) throw input_error("Newton polygon needs p(0,0) = 0");

  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : p.t) pts.push_back(e);
  // hull vertices of the lower-left boundary, from the upper-left end down
  // (min i, among those min j), choosing steepest descent first
  std::vector<std::pair<long, long>> verts;
  auto cur = *std::min_element(pts.begin(), pts.end());
  verts.push_back(cur);
  while (true) {
    bool found = false;
    std::pair<long, long> best{0, 0};
    // steepest drop: maximize (j_cur - j_w) / (i_w - i_cur) with j_w < j_cur, i_w > i_cur
    for (const auto& w : pts) {
      if (w.first <= cur.first || w.second >= cur.second) continue;
      if (!found) {
        best = w;
        found = true;
        continue;
      }
      // compare slopes (cur.j - w.j)/(w.i - cur.i) as fractions; prefer the
      // steeper one, on ties the farther point
      long lhs = (cur.second - w.second) * (best.first - cur.first);
      long rhs = (cur.second - best.second) * (w.first - cur.first);
      if (lhs > rhs || (lhs == rhs && w.first > best.first)) best = w;
    }
    if (!found) break;
    verts.push_back(best);
    cur = best;
  }

  std::vector<NewtonPolygonEdge> edges;
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    auto a = verts[k], b = verts[k + 1];
    NewtonPolygonEdge e;
    long dj = a.second - b.second, di = b.first - a.first;
    long g = gcd_long(dj, di);
    e.slope_num = dj / g;
    e.slope_den = di / g;
    for (const auto& [pt, c] : p.t) {
      // on segment a-b: collinear and between
      if (pt.first < a.first || pt.first > b.first) continue;
      long lhs = (a.second - pt.second) * di;
      long rhs = dj * (pt.first - a.first);
      if (lhs == rhs) e.support.emplace_back(pt, c);
    }
    std::sort(e.support.begin(), e.support.end());
    edges.push_back(std::move(e));
  }
  // edges come out with decreasing steepness; report increasing slope
  std::reverse(edges.begin(), edges.end());
  return edges;
}

}  // namespace mf
