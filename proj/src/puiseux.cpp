#include "milnorfiber/puiseux.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "milnorfiber/cluster.hpp"

namespace mf {
namespace {

// ---------------------------------------------------- bivariate over tower

struct TBiv {
  std::map<std::pair<long, long>, TElem> t;  // (x-exp, y-exp) -> coeff

  bool empty() const { return t.empty(); }
  void add(long i, long j, const TElem& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(key, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  bool unit_at_origin() const { return t.count({0, 0}) > 0; }
  bool divisible_by_y() const {
    if (t.empty()) return false;
    for (const auto& [e, c] : t)
      if (e.second == 0) return false;
    return true;
  }
};

TBiv tbiv_from_bipoly(const BiPoly& p) {
  TBiv r;
  for (const auto& [e, c] : p.t) r.t[{e.first, e.second}] = TElem(c);
  return r;
}

TBiv divide_y(const TBiv& p) {
  TBiv r;
  for (const auto& [e, c] : p.t) {
    if (e.second < 1) throw internal_error("divide_y: not divisible");
    r.t[{e.first, e.second - 1}] = c;
  }
  return r;
}

void divide_x_content(TBiv& p) {
  if (p.t.empty()) return;
  long m = -1;
  for (const auto& [e, c] : p.t) m = (m < 0) ? e.first : std::min(m, e.first);
  if (m <= 0) return;
  TBiv r;
  for (const auto& [e, c] : p.t) r.t[{e.first - m, e.second}] = c;
  p = std::move(r);
}

// ------------------------------------------------------------- recursion

struct Step {
  long p = 1, q = 1;  // edge slope p/q: y ~ x^(p/q)
  long a = 0, b = 0;  // Bezout, b*p - a*q = 1
  TElem w;            // face root
  long ext = 1;       // extension degree added by this step
};

struct PathEntry {
  int node = 0;
  int key = 0;
  bool inf = false;  // y-divisible leaf: no decided exponent
  Rat decided;       // global x-exponent decided at this step
  long ext = 1;
  long q = 1;
};

struct Leaf {
  int part = 0;  // index into the original parts
  std::vector<Step> steps;
  std::vector<PathEntry> path;
  bool y_leaf = false;
  TowerPtr tower;
  TBiv hpoly;  // regular continuation polynomial (unless y_leaf)
};

struct PartIn {
  int germ = 0;
  long alpha = 1;
  BiPoly poly;  // sheared component
};

struct Node {
  TowerPtr tower;
  std::vector<std::pair<int, TBiv>> parts;  // (part index, transformed poly)
  std::vector<Step> steps;
  std::vector<PathEntry> path;
  Rat off = 0, scl = 1;
  int depth = 0;
};

std::string tpoly_key(const TPoly& p) {
  std::ostringstream os;
  for (const auto& c : p.c) os << c.str() << "|";
  return os.str();
}

void bezout_for_edge(long p, long q, long& a, long& b) {
  // find a, b with b*p - a*q = 1
  long old_r = p, r = q, old_s = 1, s = 0;
  while (r != 0) {
    long qt = old_r / r;
    long tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
  }
  // old_s * p === old_r (= gcd = 1) mod q; so old_s*p - k*q = 1 for some k
  if (old_r != 1) throw internal_error("edge slope not reduced");
  b = old_s;
  a = (b * p - 1) / q;
}

struct EdgeFace {
  long p = 1, q = 1;
  // per part index-in-node: face polynomial and the t-valuation
  std::map<std::size_t, UPoly<TElem>> faces;
};

// Lower-left hull edges of the support of one transformed part.
std::vector<std::pair<long, long>> part_slopes(const TBiv& h) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : h.t) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<long, long>> out;  // (p, q) reduced slopes
  auto cur = pts.front();                  // min i, then min j
  while (true) {
    bool found = false;
    std::pair<long, long> best{0, 0};
    for (const auto& w : pts) {
      if (w.first <= cur.first || w.second >= cur.second) continue;
      if (!found) {
        best = w;
        found = true;
        continue;
      }
      long lhs = (cur.second - w.second) * (best.first - cur.first);
      long rhs = (cur.second - best.second) * (w.first - cur.first);
      if (lhs > rhs || (lhs == rhs && w.first > best.first)) best = w;
    }
    if (!found) break;
    long dp = best.first - cur.first, dj = cur.second - best.second;
    long g = gcd_long(dp, dj);
    out.emplace_back(dp / g, dj / g);
    cur = best;
  }
  return out;
}

// Face polynomial of h at slope p/q: terms minimizing q*i + p*j, coefficient
// of z^k taken at the point with j = jmax - k*q on the minimizing line.
UPoly<TElem> face_poly(const TBiv& h, long p, long q) {
  long minval = 0;
  bool first = true;
  for (const auto& [e, c] : h.t) {
    long v = q * e.first + p * e.second;
    if (first || v < minval) {
      minval = v;
      first = false;
    }
  }
  long jmax = -1;
  for (const auto& [e, c] : h.t)
    if (q * e.first + p * e.second == minval) jmax = std::max(jmax, e.second);
  UPoly<TElem> f;
  for (const auto& [e, c] : h.t) {
    if (q * e.first + p * e.second != minval) continue;
    long diff = jmax - e.second;
    if (diff % q) throw internal_error("face support off the lattice");
    long k = diff / q;
    if (f.c.size() <= static_cast<std::size_t>(k)) f.c.resize(k + 1, TElem());
    f.c[k] = c;
  }
  f.trim();
  return f;
}

TBiv substitute_step(const TBiv& h, const Step& st) {
  TBiv r;
  for (const auto& [e, c] : h.t) {
    long i = e.first, j = e.second;
    long base_x = st.q * i + st.p * j;
    // y^j = X^(p j) * sum_k C(j,k) w^(a (j-k)) Y^k ; x^i = w^(b i) X^(q i)
    Int binom(1);
    for (long k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * (j - k + 1) / k;
      TElem coef = c * st.w.pow(st.b * i + st.a * (j - k)) * TElem(Rat(binom));
      r.add(base_x, k, coef);
    }
  }
  divide_x_content(r);
  return r;
}

struct RecResult {
  std::vector<Leaf> leaves;
  int node_counter = 0;
};

void recurse(Node nd, RecResult& out) {
  if (nd.depth > 120) throw internal_error("Newton-Puiseux recursion too deep");
  int my_id = out.node_counter++;
  int key = 0;

  // Branches that terminate exactly: Y | part.
  int y_leaf_count = 0;
  for (auto it = nd.parts.begin(); it != nd.parts.end();) {
    auto& [pi, poly] = *it;
    if (poly.divisible_by_y()) {
      ++y_leaf_count;
      Leaf lf;
      lf.part = pi;
      lf.steps = nd.steps;
      lf.path = nd.path;
      lf.path.push_back({my_id, key++, true, Rat(0), 1, 1});
      lf.y_leaf = true;
      lf.tower = nd.tower;
      out.leaves.push_back(std::move(lf));
      poly = divide_y(poly);
    }
    if (poly.unit_at_origin())
      it = nd.parts.erase(it);
    else
      ++it;
  }
  if (y_leaf_count > 1)
    throw internal_error("two components share the branch y=0 (common factor upstream)");
  if (nd.parts.empty()) return;

  // Candidate slopes: union of the parts' Newton polygon edge slopes.
  std::set<std::pair<long, long>> slope_set;  // keyed by (p, q) reduced; sort by p/q
  for (const auto& [pi, poly] : nd.parts)
    for (auto s : part_slopes(poly)) slope_set.insert(s);
  std::vector<std::pair<long, long>> slopes(slope_set.begin(), slope_set.end());
  std::sort(slopes.begin(), slopes.end(), [](const auto& A, const auto& B) {
    return Rat(A.first, A.second) < Rat(B.first, B.second);
  });

  for (const auto& [p, q] : slopes) {
    // Gather the face of every part and factor them over the tower.
    // fmap: canonical key -> (psi, per-node-part multiplicities)
    std::map<std::string, std::pair<TPoly, std::map<std::size_t, int>>> fmap;
    for (std::size_t n = 0; n < nd.parts.size(); ++n) {
      UPoly<TElem> face = face_poly(nd.parts[n].second, p, q);
      if (face.deg() < 1) continue;  // single lattice point: no roots here
      for (auto& [psi, mult] : factor_over_tower(face, nd.tower)) {
        auto k = tpoly_key(psi);
        auto it = fmap.find(k);
        if (it == fmap.end()) it = fmap.emplace(k, std::make_pair(psi, std::map<std::size_t, int>{})).first;
        it->second.second[n] += mult;
      }
    }
    // Deterministic order: by degree, then key.
    std::vector<std::pair<std::string, std::pair<TPoly, std::map<std::size_t, int>>>> fs(
        fmap.begin(), fmap.end());
    std::sort(fs.begin(), fs.end(), [](const auto& A, const auto& B) {
      if (A.second.first.deg() != B.second.first.deg())
        return A.second.first.deg() < B.second.first.deg();
      return A.first < B.first;
    });

    for (auto& [fkey, entry] : fs) {
      TPoly& psi = entry.first;
      auto& mults = entry.second;
      long ext = psi.deg();
      long R_total = 0;
      for (auto& [n, m] : mults) R_total += m;

      Step st;
      st.p = p;
      st.q = q;
      bezout_for_edge(p, q, st.a, st.b);
      st.ext = ext;
      TowerPtr child_tower = nd.tower;
      if (ext > 1) {
        int lvl = (nd.tower ? nd.tower->height() : 0) + 1;
        child_tower = Tower::extend(nd.tower, psi, "a" + std::to_string(lvl));
        st.w = TElem::generator(child_tower, lvl);
      } else {
        st.w = TElem() - psi.c[0];  // monic linear: root = -c0
      }
      if (st.w.is_zero()) throw internal_error("zero face root");

      Node child;
      child.tower = child_tower;
      child.steps = nd.steps;
      child.steps.push_back(st);
      child.off = nd.off + nd.scl * Rat(p, q);
      child.scl = nd.scl / Rat(q);
      child.depth = nd.depth + 1;
      child.path = nd.path;
      child.path.push_back({my_id, key++, false, child.off, ext, q});

      for (const auto& [pi, poly] : nd.parts) {
        TBiv tr = substitute_step(poly, st);
        if (tr.unit_at_origin()) continue;
        child.parts.emplace_back(pi, std::move(tr));
      }

      if (R_total == 1) {
        if (child.parts.size() != 1)
          throw internal_error("simple face root shared by several components");
        const TBiv& H = child.parts[0].second;
        if (!H.t.count({0, 1}))
          throw internal_error("simple root did not produce a regular continuation");
        Leaf lf;
        lf.part = child.parts[0].first;
        lf.steps = child.steps;
        lf.path = child.path;
        lf.tower = child_tower;
        lf.hpoly = H;
        out.leaves.push_back(std::move(lf));
      } else {
        recurse(std::move(child), out);
      }
    }
  }
}

// ----------------------------------------------- truncated series over tower

using TSeries = std::vector<TElem>;  // index = t-exponent

TSeries ts_mul(const TSeries& a, const TSeries& b, long T) {
  TSeries r(T + 1);
  for (long i = 0; i <= T && i < static_cast<long>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j + i <= T && j < static_cast<long>(b.size()); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

TSeries ts_add(const TSeries& a, const TSeries& b, long T) {
  TSeries r(T + 1);
  for (long i = 0; i <= T; ++i) {
    TElem x = i < static_cast<long>(a.size()) ? a[i] : TElem();
    TElem y = i < static_cast<long>(b.size()) ? b[i] : TElem();
    r[i] = x + y;
  }
  return r;
}

TSeries ts_inv(const TSeries& u, long T) {
  if (u.empty() || u[0].is_zero()) throw internal_error("series inverse of non-unit");
  TSeries v(T + 1);
  v[0] = TElem(1L) / u[0];
  for (long k = 1; k <= T; ++k) {
    TElem s;
    for (long i = 1; i <= k && i < static_cast<long>(u.size()); ++i)
      s = s + u[i] * v[k - i];
    v[k] = (TElem() - s) / u[0];
  }
  return v;
}

// Evaluate the bivariate H(X, Y) at Y = series y, truncated at T.
TSeries eval_H(const std::vector<TSeries>& ycoeffs, const TSeries& y, long T) {
  TSeries acc(T + 1);
  for (auto it = ycoeffs.rbegin(); it != ycoeffs.rend(); ++it)
    acc = ts_add(ts_mul(acc, y, T), *it, T);
  return acc;
}

// Solve H(X, Y(X)) = 0 with Y(0) = 0 (regular root) up to order T.
TSeries solve_regular(const TBiv& H, long T) {
  long dy = 0;
  for (const auto& [e, c] : H.t) dy = std::max(dy, e.second);
  std::vector<TSeries> A(dy + 1, TSeries(T + 1));
  for (const auto& [e, c] : H.t)
    if (e.first <= T) A[e.second][e.first] = A[e.second][e.first] + c;
  std::vector<TSeries> Ad(dy > 0 ? dy : 1, TSeries(T + 1));
  for (long j = 1; j <= dy; ++j)
    for (long i = 0; i <= T; ++i) Ad[j - 1][i] = A[j][i] * TElem(j);

  TSeries y(T + 1);
  long iters = 2;
  while ((1L << iters) <= T + 1) ++iters;
  for (long it = 0; it <= iters; ++it) {
    TSeries hy = eval_H(A, y, T);
    TSeries hdy = eval_H(Ad, y, T);
    TSeries corr = ts_mul(hy, ts_inv(hdy, T), T);
    for (long i = 0; i <= T; ++i) y[i] = y[i] - corr[i];
    if (!y[0].is_zero()) throw internal_error("regular solve drifted from the origin");
  }
  TSeries check = eval_H(A, y, T);
  for (long i = 0; i <= T; ++i)
    if (!check[i].is_zero()) throw internal_error("regular series does not satisfy its equation");
  return y;
}

}  // namespace

// ------------------------------------------------------------ public layer

std::vector<long> mult_sequence_from_chars(long e, const std::vector<Rat>& chars);

namespace {

// shear candidates in the order 1, -1, 2, -2, ...
long shear_at(long idx) { return (idx % 2 == 1) ? (idx + 1) / 2 : -(idx / 2); }
long shear_index(long c) { return c > 0 ? 2 * c - 1 : -2 * c; }

bool shear_valid(const std::vector<BiPoly>& germs, long c) {
  for (const auto& g : germs) {
    if (g.is_zero()) continue;
    long m = multiplicity_at_origin(g);
    Rat v(0);
    for (const auto& [ex, co] : g.t)
      if (ex.first + ex.second == m) v += co * rat_pow(Rat(c), ex.first);
    if (v == 0) return false;
  }
  return true;
}

}  // namespace

long choose_shear(const std::vector<BiPoly>& germs) {
  for (long idx = 1; idx <= 4000; ++idx)
    if (shear_valid(germs, shear_at(idx))) return shear_at(idx);
  throw internal_error("no valid shear found");
}

long next_shear(const std::vector<BiPoly>& germs, long after) {
  for (long idx = shear_index(after) + 1; idx <= 8000; ++idx)
    if (shear_valid(germs, shear_at(idx))) return shear_at(idx);
  throw internal_error("no second shear found");
}

namespace {

struct AssembleCtx {
  std::vector<PartIn> parts;
  std::vector<Leaf> leaves;
};

PuiseuxBranch assemble_branch(const AssembleCtx& ctx, const Leaf& lf) {
  const PartIn& part = ctx.parts[lf.part];
  PuiseuxBranch br;
  br.germ = part.germ;
  br.alpha = part.alpha;
  br.tower = lf.tower;
  br.orbit_size = lf.tower ? lf.tower->degree() : 1;

  br.e = 1;
  for (const auto& st : lf.steps) br.e *= st.q;

  // characteristic exponents: steps with q > 1, splitting: steps with ext > 1
  Rat off(0), scl(1);
  long cumdeg = 1;
  for (const auto& st : lf.steps) {
    Rat decided = off + scl * Rat(st.p, st.q);
    if (st.q > 1) br.char_exponents.push_back(decided);
    if (st.ext > 1) {
      cumdeg *= st.ext;
      br.splitting.emplace_back(decided, cumdeg);
    }
    off = decided;
    scl = scl / Rat(st.q);
  }
  br.mult_sequence = mult_sequence_from_chars(br.e, br.char_exponents);
  return br;
}

void reconstruct_series(PuiseuxBranch& br, const Leaf& lf, long T) {
  // X_k = gamma_k t^(m_k); bottom-up composition.
  std::size_t K = lf.steps.size();
  std::vector<TElem> gamma(K + 1);
  std::vector<long> mm(K + 1);
  gamma[K] = TElem(1L);
  mm[K] = 1;
  for (std::size_t k = K; k-- > 0;) {
    gamma[k] = lf.steps[k].w.pow(lf.steps[k].b) * gamma[k + 1].pow(lf.steps[k].q);
    mm[k] = lf.steps[k].q * mm[k + 1];
  }
  br.lambda = gamma[0];
  if (mm[0] != br.e) throw internal_error("ramification bookkeeping mismatch");

  std::map<long, TElem> ys;  // current level series, t-exponent -> coeff
  if (!lf.y_leaf) {
    TSeries reg = solve_regular(lf.hpoly, T);
    for (long i = 1; i < static_cast<long>(reg.size()); ++i)
      if (!reg[i].is_zero()) ys[i] = reg[i];
  }
  for (std::size_t k = K; k-- > 0;) {
    // y_k = X_{k+1}^p * (w^a + y_{k+1})
    const Step& st = lf.steps[k];
    std::map<long, TElem> nys;
    TElem scale = gamma[k + 1].pow(st.p);
    long shift = st.p * mm[k + 1];
    TElem head = st.w.pow(st.a) * scale;
    if (!head.is_zero()) nys[shift] = head;
    for (const auto& [n, c] : ys) {
      if (shift + n > T) continue;
      TElem v = c * scale;
      if (!v.is_zero()) {
        auto [it, ins] = nys.emplace(shift + n, v);
        if (!ins) {
          it->second = it->second + v;
          if (it->second.is_zero()) nys.erase(it);
        }
      }
    }
    ys = std::move(nys);
  }
  br.series = std::move(ys);
}

}  // namespace

Rat PairExpansion::instance_divergence(int bi, long ii, int bj, long ij) const {
  return instance_divergence_from_data(branches, contacts, bi, ii, bj, ij);
}

const ContactRecord& contact(const PairExpansion& ex, int b1, int b2) {
  if (b1 > b2) std::swap(b1, b2);
  for (const auto& c : ex.contacts)
    if (c.b1 == b1 && c.b2 == b2) return c;
  throw internal_error("contact record missing");
}

PairExpansion expand_pair(const BiPoly& f, const BiPoly& g, bool curve_only) {
  if (f.is_zero()) throw input_error("f is zero");
  if (!f.vanishes_at_origin()) throw input_error("f does not vanish at the origin");
  if (!curve_only) {
    if (g.is_zero()) throw input_error("g is zero");
    if (!g.vanishes_at_origin()) throw input_error("g does not vanish at the origin");
    BiPoly d = gcd(f, g);
    if (d.total_degree() > 0)
      throw input_error("f and g have a common factor: " + print_poly(d));
  }

  PairExpansion ex;
  ex.curve_only = curve_only;
  std::vector<BiPoly> germs = {f};
  if (!curve_only) germs.push_back(g);
  ex.shear_c = choose_shear(germs);
  ex.f_sheared = shear_x(f, ex.shear_c);
  if (!curve_only) ex.g_sheared = shear_x(g, ex.shear_c);

  AssembleCtx ctx;
  auto add_parts = [&ctx](const BiPoly& sheared, int germ) {
    for (auto& [comp, mult] : squarefree_decompose(sheared)) {
      if (!comp.vanishes_at_origin()) continue;  // unit component of the germ
      ctx.parts.push_back({germ, mult, comp});
    }
  };
  add_parts(ex.f_sheared, 0);
  if (!curve_only) add_parts(ex.g_sheared, 1);
  if (ctx.parts.empty()) throw input_error("no components vanish at the origin");

  Node root;
  root.tower = Tower::rationals();
  for (std::size_t n = 0; n < ctx.parts.size(); ++n) {
    TBiv tb = tbiv_from_bipoly(ctx.parts[n].poly);
    divide_x_content(tb);  // cannot trigger: components are y-regular
    root.parts.emplace_back(static_cast<int>(n), std::move(tb));
  }
  RecResult rec;
  recurse(std::move(root), rec);
  ctx.leaves = std::move(rec.leaves);
  if (ctx.leaves.empty()) throw internal_error("no branches found");

  // Deterministic branch order: f-leaves before g-leaves, then by path keys.
  std::stable_sort(ctx.leaves.begin(), ctx.leaves.end(), [&](const Leaf& A, const Leaf& B) {
    int ga = ctx.parts[A.part].germ, gb = ctx.parts[B.part].germ;
    if (ga != gb) return ga < gb;
    for (std::size_t k = 0; k < std::min(A.path.size(), B.path.size()); ++k) {
      if (A.path[k].key != B.path[k].key) return A.path[k].key < B.path[k].key;
    }
    return A.path.size() < B.path.size();
  });

  for (const auto& lf : ctx.leaves) ex.branches.push_back(assemble_branch(ctx, lf));

  // Contacts from the recursion tree.
  for (std::size_t i = 0; i < ctx.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < ctx.leaves.size(); ++j) {
      const auto& A = ctx.leaves[i];
      const auto& B = ctx.leaves[j];
      ContactRecord cr;
      cr.b1 = static_cast<int>(i);
      cr.b2 = static_cast<int>(j);
      std::size_t k = 0;
      long cumdeg = 1;
      while (k < A.path.size() && k < B.path.size() && A.path[k].key == B.path[k].key) {
        if (A.path[k].node != B.path[k].node)
          throw internal_error("path bookkeeping out of sync");
        if (A.path[k].ext > 1) {
          cumdeg *= A.path[k].ext;
          cr.prefix_levels.emplace_back(A.path[k].decided, cumdeg);
        }
        ++k;
      }
      if (k >= A.path.size() || k >= B.path.size())
        throw internal_error("one branch path is a prefix of another");
      const PathEntry& ea = A.path[k];
      const PathEntry& eb = B.path[k];
      if (ea.inf && eb.inf) throw internal_error("two terminating leaves at one node");
      if (ea.inf)
        cr.contact_exponent = eb.decided;
      else if (eb.inf)
        cr.contact_exponent = ea.decided;
      else
        cr.contact_exponent = std::min(ea.decided, eb.decided);

      long s1 = ex.branches[i].orbit_size, s2 = ex.branches[j].orbit_size;
      long prev = 1;
      for (const auto& [exp, n] : cr.prefix_levels) {
        long cnt = s1 * s2 / prev - s1 * s2 / n;
        if (cnt > 0) cr.profile.emplace_back(exp, cnt);
        prev = n;
      }
      cr.profile.emplace_back(cr.contact_exponent, s1 * s2 / prev);

      long total = 0;
      for (const auto& [exp, cnt] : cr.profile)
        total += cnt * pairwise_intersection(ex.branches[i].e, ex.branches[i].char_exponents,
                                             ex.branches[j].e, ex.branches[j].char_exponents, exp);
      cr.intersection_multiplicity = total;
      ex.contacts.push_back(std::move(cr));
    }
  }

  // Truncation: past every characteristic exponent and every contact, plus
  // one more step of margin.
  for (std::size_t i = 0; i < ex.branches.size(); ++i) {
    Rat bound(1);
    if (!ex.branches[i].char_exponents.empty())
      bound = std::max(bound, ex.branches[i].char_exponents.back());
    for (const auto& cr : ex.contacts)
      if (cr.b1 == static_cast<int>(i) || cr.b2 == static_cast<int>(i))
        bound = std::max(bound, cr.contact_exponent);
    for (const auto& [exp, n] : ex.branches[i].splitting) bound = std::max(bound, exp);
    bound += 1;
    ex.branches[i].trunc_exponent = bound;
    long T = static_cast<long>(mpz_class(bound.get_num() * ex.branches[i].e / bound.get_den() + 2).get_si());
    reconstruct_series(ex.branches[i], ctx.leaves[i], T);
  }
  return ex;
}

std::vector<PuiseuxBranch> puiseux_branches(const BiPoly& p) {
  return expand_pair(p, BiPoly{}, true).branches;
}

VanishCertificate verify_branch(const BiPoly& p_sheared, const PuiseuxBranch& b) {
  VanishCertificate cert;
  long T = 0;
  {
    Rat tr = b.trunc_exponent * Rat(b.e);
    T = static_cast<long>(mpz_class(tr.get_num() / tr.get_den()).get_si());
  }
  for (const auto& [n, c] : b.series) T = std::max(T, n);

  // x(t)^i as truncated series is a monomial; y(t)^j by repeated products.
  // Assemble sum of c_ij * x(t)^i * y(t)^j up to t^T.
  std::map<long, TElem> acc;
  auto add_to = [&acc, T](long n, const TElem& v) {
    if (n > T || v.is_zero()) return;
    auto [it, ins] = acc.emplace(n, v);
    if (!ins) {
      it->second = it->second + v;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  // precompute y powers
  long dy = p_sheared.deg_y();
  std::vector<std::map<long, TElem>> ypow(dy + 1);
  ypow[0][0] = TElem(1L);
  for (long j = 1; j <= dy; ++j) {
    for (const auto& [n1, c1] : ypow[j - 1])
      for (const auto& [n2, c2] : b.series) {
        if (n1 + n2 > T) continue;
        auto [it, ins] = ypow[j].emplace(n1 + n2, c1 * c2);
        if (!ins) {
          it->second = it->second + c1 * c2;
          if (it->second.is_zero()) ypow[j].erase(it);
        }
      }
  }
  for (const auto& [e, c] : p_sheared.t) {
    long i = e.first, j = e.second;
    TElem xc = b.lambda.pow(i) * TElem(c);
    long xshift = i * b.e;
    if (xshift > T) continue;
    for (const auto& [n, cy] : ypow[j]) add_to(xshift + n, xc * cy);
  }
  long bad = -1;
  Rat exact_bound = b.trunc_exponent * Rat(b.e);
  long guard = static_cast<long>(mpz_class(exact_bound.get_num() / exact_bound.get_den()).get_si());
  for (const auto& [n, c] : acc) {
    if (n <= guard && !c.is_zero()) {
      bad = n;
      break;
    }
  }
  cert.checked_t_order = guard;
  if (bad >= 0) {
    cert.ok = false;
    cert.detail = "nonzero coefficient at t^" + std::to_string(bad);
  } else {
    cert.ok = true;
    cert.detail = "vanishes through t^" + std::to_string(guard);
  }
  return cert;
}

}  // namespace mf
