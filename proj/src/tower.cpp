#include "milnorfiber/tower.hpp"

#include <algorithm>

#include "milnorfiber/intfactor.hpp"

namespace mf {

TElem::TElem(TowerPtr tw, int height, std::vector<TElem> coeffs)
    : tw_(std::move(tw)), h_(height), c_(std::move(coeffs)) {
  normalize();
}

TElem TElem::generator(const TowerPtr& tw, int level) {
  std::vector<TElem> c = {TElem(0L), TElem(1L)};
  return TElem(tw, level, std::move(c));
}

const Rat& TElem::rat() const {
  if (h_ != 0) throw internal_error("TElem::rat on a non-rational element");
  return r_;
}

void TElem::normalize() {
  if (h_ == 0) return;
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) {
    h_ = 0;
    r_ = 0;
    tw_.reset();
    c_.clear();
  } else if (c_.size() == 1) {
    TElem inner = std::move(c_[0]);
    *this = std::move(inner);
  }
}

namespace {

const TowerPtr& deeper(const TowerPtr& a, const TowerPtr& b) {
  if (!a) return b;
  if (!b) return a;
  return a->height() >= b->height() ? a : b;
}

}  // namespace

bool tower_extends(const TowerPtr& tw, const TowerPtr& prefix) {
  if (!prefix || prefix->height() == 0) return true;
  if (!tw || tw->height() < prefix->height()) return false;
  for (int i = 0; i < prefix->height(); ++i) {
    if (tw->levels[i].minpoly.size() != prefix->levels[i].minpoly.size()) return false;
    if (!(std::equal(tw->levels[i].minpoly.begin(), tw->levels[i].minpoly.end(),
                     prefix->levels[i].minpoly.begin(),
                     [](const TElem& x, const TElem& y) { return x == y; })))
      return false;
  }
  return true;
}

TElem operator+(const TElem& a, const TElem& b) {
  if (a.h_ == 0 && b.h_ == 0) return TElem(Rat(a.r_ + b.r_));
  if (a.h_ < b.h_) {
    TElem r = b;
    r.c_[0] = a + r.c_[0];
    r.normalize();
    return r;
  }
  if (b.h_ < a.h_) {
    TElem r = a;
    r.c_[0] = r.c_[0] + b;
    r.normalize();
    return r;
  }
  TElem r;
  r.h_ = a.h_;
  r.tw_ = deeper(a.tw_, b.tw_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    TElem x = i < a.c_.size() ? a.c_[i] : TElem();
    TElem y = i < b.c_.size() ? b.c_[i] : TElem();
    r.c_[i] = x + y;
  }
  r.normalize();
  return r;
}

TElem operator-(const TElem& a, const TElem& b) { return a + b * TElem(-1L); }

TElem operator*(const TElem& a, const TElem& b) {
  if (a.h_ == 0 && b.h_ == 0) return TElem(Rat(a.r_ * b.r_));
  if (a.is_zero() || b.is_zero()) return TElem();
  if (a.h_ < b.h_) {
    TElem r = b;
    for (auto& ci : r.c_) ci = a * ci;
    r.normalize();
    return r;
  }
  if (b.h_ < a.h_) {
    TElem r = a;
    for (auto& ci : r.c_) ci = ci * b;
    r.normalize();
    return r;
  }
  // Same height h > 0: convolve, then reduce modulo the level minpoly.
  const TowerPtr& tw = deeper(a.tw_, b.tw_);
  if (!tw || tw->height() < a.h_) throw internal_error("TElem multiply: missing tower");
  std::vector<TElem> conv(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      conv[i + j] = conv[i + j] + a.c_[i] * b.c_[j];
  const auto& mp = tw->levels[a.h_ - 1].minpoly;  // monic
  long dm = static_cast<long>(mp.size()) - 1;
  long dc = static_cast<long>(conv.size()) - 1;
  while (dc >= dm) {
    TElem lead = conv[dc];
    if (!lead.is_zero()) {
      for (long i = 0; i <= dm; ++i)
        conv[dc - dm + i] = conv[dc - dm + i] - lead * mp[i];
    }
    conv.pop_back();
    --dc;
  }
  return TElem(tw, a.h_, std::move(conv));
}

bool operator==(const TElem& a, const TElem& b) {
  if (a.h_ != b.h_) return false;
  if (a.h_ == 0) return a.r_ == b.r_;
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

TElem TElem::inverse() const {
  if (h_ == 0) {
    if (r_ == 0) throw internal_error("TElem inverse of zero");
    return TElem(Rat(1 / r_));
  }
  // Extended Euclid of (this, minpoly) over the level below.
  const auto& mp = tw_->levels[h_ - 1].minpoly;
  TPoly m;
  m.c = mp;
  TPoly a;
  a.c = c_;
  TPoly r0 = m, r1 = a;
  TPoly s0, s1 = TPoly::constant(TElem(1L));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    TPoly ns = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  if (r0.deg() != 0) throw internal_error("TElem inverse: element not invertible (tower defect)");
  TPoly inv = s0 * (TElem(1L) / r0.c[0]);
  // inv * this == 1 mod minpoly; fold back into an element.
  std::vector<TElem> cc = inv.c;
  return TElem(tw_, h_, std::move(cc));
}

TElem operator/(const TElem& a, const TElem& b) { return a * b.inverse(); }

TElem TElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TElem r(1L), b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

std::string TElem::str() const {
  if (h_ == 0) return r_.get_str();
  std::string name = tw_ ? tw_->levels[h_ - 1].name : "g" + std::to_string(h_);
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += " + ";
    s += c_[i].str();
    if (i == 1) s += "*" + name;
    if (i > 1) s += "*" + name + "^" + std::to_string(i);
  }
  return s + ")";
}

TowerPtr Tower::rationals() { return std::make_shared<Tower>(); }

TowerPtr Tower::extend(const TowerPtr& base, const TPoly& minpoly, const std::string& name) {
  if (minpoly.deg() < 2) throw internal_error("tower extension of degree < 2");
  if (!(minpoly.lc() == TElem(1L))) throw internal_error("tower extension needs a monic minpoly");
  auto t = std::make_shared<Tower>(base ? *base : Tower{});
  t->levels.push_back({name, minpoly.c});
  return t;
}

QPoly tpoly_to_qpoly(const TPoly& p) {
  QPoly q;
  q.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) q.c[i] = p.c[i].rat();
  q.trim();
  return q;
}

TPoly qpoly_to_tpoly(const QPoly& p) {
  TPoly t;
  t.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) t.c[i] = TElem(p.c[i]);
  t.trim();
  return t;
}

namespace {

// Height of the tower actually used by the coefficients of p.
int used_height(const TPoly& p) {
  int h = 0;
  for (const auto& c : p.c) h = std::max(h, c.height());
  return h;
}

// Lagrange interpolation through rational nodes with TElem values.
TPoly lagrange(const std::vector<Rat>& xs, const std::vector<TElem>& ys) {
  TPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    TPoly li = TPoly::constant(TElem(1L));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      TPoly lin;
      lin.c = {TElem(Rat(-xs[j])), TElem(1L)};
      li = li * lin;
      denom *= xs[i] - xs[j];
    }
    acc = acc + li * (ys[i] * TElem(Rat(1 / denom)));
  }
  return acc;
}

// Express a height-h element as a polynomial in the level-h generator with
// height-(h-1) coefficients (constant if the height is lower).
TPoly rep_in_generator(const TElem& e, int h) {
  if (e.height() < h) return TPoly::constant(e);
  TPoly r;
  r.c = e.coeffs();
  r.trim();
  return r;
}

std::vector<TPoly> factor_squarefree_over_tower(const TPoly& p, const TowerPtr& tw, int h);

// Trager: factor squarefree monic p over a tower of height h >= 1.
std::vector<TPoly> trager(const TPoly& p, const TowerPtr& tw, int h) {
  const auto& level = tw->levels[h - 1];
  TPoly M;
  M.c = level.minpoly;
  long dM = M.deg();
  TElem theta = TElem::generator(tw, h);

  for (long shift_i = 0; shift_i < 40; ++shift_i) {
    long s = (shift_i % 2 == 0) ? shift_i / 2 : -(shift_i / 2 + 1);
    TPoly ps = shift_arg(p, theta * TElem(-s));
    // Norm via evaluation / interpolation: N(z0) = Res_theta(M, ps(z0)).
    long dN = p.deg() * dM;
    std::vector<Rat> xs;
    std::vector<TElem> ys;
    xs.reserve(dN + 1);
    for (long j = 0; j <= dN; ++j) {
      Rat x0(j);
      TElem v = eval(ps, TElem(x0));
      TPoly vrep = rep_in_generator(v, h);
      TElem res = resultant(M, vrep);
      if (res.height() >= h) throw internal_error("norm did not drop height");
      xs.push_back(x0);
      ys.push_back(res);
    }
    TPoly N = lagrange(xs, ys);
    if (N.deg() != dN) throw internal_error("norm degree mismatch");
    if (gcd(N, derivative(N)).deg() != 0) continue;  // try the next shift

    auto nf = factor_squarefree_over_tower(monic(N), tw, h - 1);
    std::vector<TPoly> out;
    for (const auto& ni : nf) {
      TPoly cand = shift_arg(ni, theta * TElem(s));
      TPoly g = gcd(p, cand);
      if (g.deg() > 0) out.push_back(monic(g));
    }
    long total = 0;
    for (const auto& g : out) total += g.deg();
    if (total != p.deg()) throw internal_error("Trager factor degrees do not add up");
    return out;
  }
  throw internal_error("Trager: no squarefree-norm shift found; cannot certify factorization");
}

std::vector<TPoly> factor_squarefree_over_tower(const TPoly& p, const TowerPtr& tw, int h) {
  if (p.deg() == 1) return {monic(p)};
  int hu = used_height(p);
  if (hu > h) throw internal_error("coefficients deeper than the working height");
  if (h == 0 || hu == 0) {
    // Over Q (or rational coefficients viewed inside the tower).
    if (h == 0) {
      auto f = factor_qpoly(tpoly_to_qpoly(p));
      std::vector<TPoly> out;
      for (auto& [q, m] : f) {
        if (m != 1) throw internal_error("squarefree input factored with multiplicity");
        out.push_back(qpoly_to_tpoly(q));
      }
      return out;
    }
    // Rational coefficients but factoring over a genuine extension: recurse
    // through the levels anyway (a rational polynomial can still split).
  }
  if (h == 0) return {monic(p)};
  return trager(monic(p), tw, h);
}

}  // namespace

std::vector<std::pair<TPoly, int>> factor_over_tower(const TPoly& p, const TowerPtr& tw) {
  std::vector<std::pair<TPoly, int>> out;
  if (p.deg() <= 0) return out;
  int h = tw ? tw->height() : 0;
  for (auto& [sq, mult] : squarefree_decomposition(p)) {
    for (auto& f : factor_squarefree_over_tower(sq, tw, h)) out.emplace_back(f, mult);
  }
  return out;
}

}  // namespace mf
