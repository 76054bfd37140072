#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "milnorfiber/rational.hpp"

namespace mf {

// Dense univariate polynomial over a field F. F must be default-constructible
// to zero, constructible from long, and support + - * / and ==.
template <class F>
struct UPoly {
  std::vector<F> c;  // ascending, no trailing zeros

  UPoly() = default;
  explicit UPoly(std::vector<F> cc) : c(std::move(cc)) { trim(); }
  static UPoly constant(const F& a) {
    UPoly p;
    if (!(a == F())) p.c.push_back(a);
    return p;
  }
  static UPoly x() {
    UPoly p;
    p.c = {F(), F(1)};
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == F()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long deg() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
  const F& lc() const { return c.back(); }
  F at(std::size_t i) const { return i < c.size() ? c[i] : F(); }

  bool operator==(const UPoly& o) const { return c == o.c; }
};

template <class F>
UPoly<F> operator+(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<F> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
  return UPoly<F>(std::move(r));
}

template <class F>
UPoly<F> operator-(const UPoly<F>& a, const UPoly<F>& b) {
  std::vector<F> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) - b.at(i);
  return UPoly<F>(std::move(r));
}

template <class F>
UPoly<F> operator*(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<F> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
  return UPoly<F>(std::move(r));
}

template <class F>
UPoly<F> operator*(const UPoly<F>& a, const F& s) {
  std::vector<F> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] * s;
  return UPoly<F>(std::move(r));
}

// Euclidean division; F is a field so this always succeeds for b != 0.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw internal_error("UPoly divmod by zero");
  UPoly<F> q, r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(a.c.size() - b.c.size() + 1, F());
  F inv_lc = F(1) / b.lc();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    long k = r.deg() - b.deg();
    F coef = r.lc() * inv_lc;
    q.c[k] = q.c[k] + coef;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[k + i] = r.c[k + i] - coef * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class F>
UPoly<F> operator/(const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw internal_error("UPoly exact division left a remainder");
  return q;
}

template <class F>
UPoly<F> monic(const UPoly<F>& a) {
  if (a.is_zero()) return a;
  F inv = F(1) / a.lc();
  return a * inv;
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class F>
UPoly<F> derivative(const UPoly<F>& a) {
  if (a.c.size() <= 1) return {};
  std::vector<F> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * F(static_cast<long>(i));
  return UPoly<F>(std::move(r));
}

template <class F>
F eval(const UPoly<F>& a, const F& x) {
  F r;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
  return r;
}

// p(x + s) via Horner-style shift.
template <class F>
UPoly<F> shift_arg(const UPoly<F>& p, const F& s) {
  UPoly<F> r;
  UPoly<F> lin;  // x + s
  lin.c = {s, F(1)};
  lin.trim();
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
    r = r * lin + UPoly<F>::constant(*it);
  return r;
}

template <class F>
UPoly<F> pow_upoly(UPoly<F> b, unsigned long e) {
  UPoly<F> r = UPoly<F>::constant(F(1));
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// Resultant via the Euclidean remainder sequence (field coefficients).
template <class F>
F resultant(UPoly<F> a, UPoly<F> b) {
  if (a.is_zero() || b.is_zero()) return F();
  F res(1);
  bool neg = false;
  while (b.deg() > 0) {
    auto r = divmod(a, b).second;
    if (r.is_zero()) return F();
    long da = a.deg(), db = b.deg(), dr = r.deg();
    // res *= lc(b)^(da - dr), sign (-1)^(da*db)
    F lcb = b.lc();
    for (long i = 0; i < da - dr; ++i) res = res * lcb;
    if ((da % 2) && (db % 2)) neg = !neg;
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant: res *= b^deg(a)
  for (long i = 0; i < a.deg(); ++i) res = res * b.c[0];
  if (neg) res = F() - res;
  return res;
}

// Yun's square-free decomposition (characteristic zero).
// Returns list of (factor, multiplicity), factors monic, pairwise coprime.
template <class F>
std::vector<std::pair<UPoly<F>, int>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<std::pair<UPoly<F>, int>> out;
  if (p.deg() <= 0) return out;
  UPoly<F> a = monic(p);
  UPoly<F> g = gcd(a, derivative(a));
  UPoly<F> w = a / g;
  int mult = 1;
  while (w.deg() > 0) {
    UPoly<F> y = gcd(w, g);
    UPoly<F> fac = w / y;
    if (fac.deg() > 0) out.emplace_back(monic(fac), mult);
    w = y;
    g = g / y;
    ++mult;
  }
  return out;
}

using QPoly = UPoly<Rat>;

}  // namespace mf
