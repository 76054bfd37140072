#include "milnorfiber/intfactor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mf {
namespace {

using ZP = std::vector<Int>;  // ascending, no trailing zeros

void ztrim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long zdeg(const ZP& a) { return static_cast<long>(a.size()) - 1; }

// ---------------------------------------------------------------- F_p layer

struct FpCtx {
  long p;
  long mul(long a, long b) const { return static_cast<long>((__int128)a * b % p); }
  long add(long a, long b) const { long r = a + b; return r >= p ? r - p : r; }
  long sub(long a, long b) const { long r = a - b; return r < 0 ? r + p : r; }
  long inv(long a) const {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
  }
};

using FpPoly = std::vector<long>;  // ascending, no trailing zeros

void ftrim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
long fdeg(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }

FpPoly fmul(const FpCtx& K, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  ftrim(r);
  return r;
}

FpPoly fsub(const FpCtx& K, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    long x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = K.sub(x, y);
  }
  ftrim(r);
  return r;
}

FpPoly fmod(const FpCtx& K, FpPoly a, const FpPoly& m) {
  long dm = fdeg(m);
  long lci = K.inv(m.back());
  while (fdeg(a) >= dm) {
    long k = fdeg(a) - dm;
    long c = K.mul(a.back(), lci);
    for (long i = 0; i <= dm; ++i) a[k + i] = K.sub(a[k + i], K.mul(c, m[i]));
    ftrim(a);
  }
  return a;
}

FpPoly fdivexact(const FpCtx& K, FpPoly a, const FpPoly& b) {
  FpPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  long lci = K.inv(b.back());
  while (fdeg(a) >= fdeg(b)) {
    long k = fdeg(a) - fdeg(b);
    long c = K.mul(a.back(), lci);
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = K.sub(a[k + i], K.mul(c, b[i]));
    ftrim(a);
  }
  if (!a.empty()) throw internal_error("fdivexact: not divisible");
  ftrim(q);
  return q;
}

FpPoly fmonic(const FpCtx& K, FpPoly a) {
  if (a.empty()) return a;
  long s = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, s);
  return a;
}

FpPoly fgcd(const FpCtx& K, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    FpPoly r = fmod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(K, std::move(a));
}

FpPoly fderiv(const FpCtx& K, const FpPoly& a) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], i % K.p);
  ftrim(r);
  return r;
}

FpPoly fpowmod(const FpCtx& K, FpPoly b, const Int& e, const FpPoly& m) {
  FpPoly r = {1};
  b = fmod(K, std::move(b), m);
  for (long i = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
    r = fmod(K, fmul(K, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fmod(K, fmul(K, r, b), m);
  }
  return r;
}

// Equal-degree splitting (p odd), deterministic seed.
void edf(const FpCtx& K, const FpPoly& f, long d, std::mt19937_64& rng,
         std::vector<FpPoly>& out) {
  if (fdeg(f) == d) {
    out.push_back(f);
    return;
  }
  Int exp = (int_pow(Int(K.p), static_cast<unsigned long>(d)) - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    FpPoly r(fdeg(f), 0);
    for (auto& c : r) c = static_cast<long>(rng() % static_cast<unsigned long>(K.p));
    ftrim(r);
    if (r.empty()) continue;
    FpPoly s = fpowmod(K, r, exp, f);
    if (s.empty()) continue;
    s[0] = K.sub(s[0], 1);
    ftrim(s);
    FpPoly g = fgcd(K, s, f);
    if (fdeg(g) > 0 && fdeg(g) < fdeg(f)) {
      edf(K, g, d, rng, out);
      edf(K, fdivexact(K, f, g), d, rng, out);
      return;
    }
  }
  throw internal_error("equal-degree factorization did not split");
}

// Full factorization of a squarefree monic polynomial mod p.
std::vector<FpPoly> factor_fp_squarefree(const FpCtx& K, FpPoly f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eedf00dULL);
  FpPoly h = {0, 1};  // x
  long d = 0;
  while (fdeg(f) > 0) {
    ++d;
    if (2 * d > fdeg(f)) {
      out.push_back(fmonic(K, f));
      break;
    }
    h = fpowmod(K, h, Int(K.p), f);
    FpPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = K.sub(hx[1], 1);
    ftrim(hx);
    FpPoly g = fgcd(K, hx, f);
    if (fdeg(g) > 0) {
      edf(K, g, d, rng, out);
      f = fdivexact(K, f, g);
      h = fmod(K, h, f);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Z layer

ZP z_from_fp(const FpPoly& a) {
  ZP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

FpPoly fp_from_z(const FpCtx& K, const ZP& a) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int m = a[i] % K.p;
    if (m < 0) m += K.p;
    r[i] = m.get_si();
  }
  ftrim(r);
  return r;
}

ZP zmul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZP zsub(const ZP& a, const ZP& b) {
  ZP r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  ztrim(r);
  return r;
}

void zmod_center(ZP& a, const Int& m) {
  Int half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(a);
}

// Exact division in Z[x] for a monic divisor; returns false if not divisible.
bool zdiv_monic(const ZP& a, const ZP& b, ZP& q) {
  ZP r = a;
  if (zdeg(r) < zdeg(b)) return r.empty();
  q.assign(r.size() - b.size() + 1, Int(0));
  while (zdeg(r) >= zdeg(b)) {
    long k = zdeg(r) - zdeg(b);
    Int c = r.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
    ztrim(r);
  }
  return r.empty();
}

struct HenselCtx {
  long p;
  Int pk;       // p^K
  int K;
};

// Linear Hensel lift of a coprime monic pair g*h = f (mod p) up to p^K.
void lift_pair(const HenselCtx& H, const ZP& f, ZP& g, ZP& h) {
  FpCtx K{H.p};
  FpPoly gp = fp_from_z(K, g), hp = fp_from_z(K, h);
  // s*g + t*h = 1 mod p via extended Euclid over F_p.
  FpPoly s = {}, t = {1}, r0 = gp, r1 = hp, s0 = {1}, s1 = {};
  while (!r1.empty()) {
    FpPoly q;
    {  // q = r0 div r1
      FpPoly a = r0;
      q.assign(a.size() > r1.size() - 1 ? a.size() - r1.size() + 1 : 1, 0);
      long lci = K.inv(r1.back());
      while (fdeg(a) >= fdeg(r1)) {
        long k = fdeg(a) - fdeg(r1);
        long c = K.mul(a.back(), lci);
        q[k] = K.add(q[k], c);
        for (std::size_t i = 0; i < r1.size(); ++i) a[k + i] = K.sub(a[k + i], K.mul(c, r1[i]));
        ftrim(a);
      }
      ftrim(q);
      r0 = std::move(a);
    }
    std::swap(r0, r1);
    FpPoly ns = fsub(K, s0, fmul(K, q, s1));
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // r0 = gcd (a unit); normalize so s0*g = r0 ... we want s,t with s*g+t*h=1.
  long u = K.inv(r0[0]);
  for (auto& c : s0) c = K.mul(c, u);
  s = s0;
  // t = (1 - s*g)/h mod p
  FpPoly one = {1};
  t = fdivexact(K, fsub(K, one, fmul(K, s, gp)), hp);

  Int pj(H.p);
  for (int j = 1; j < H.K; ++j) {
    // e = (f - g*h)/p^j  mod p
    ZP e = zsub(f, zmul(g, h));
    ZP ediv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ediv[i] = e[i] / pj;
    FpPoly ep = fp_from_z(K, ediv);
    // u = (t*e) mod g ; v = (e - u*h)/g  (all mod p)
    FpPoly up = fmod(K, fmul(K, t, ep), gp);
    FpPoly vp = fdivexact(K, fsub(K, ep, fmul(K, up, hp)), gp);
    ZP uz = z_from_fp(up), vz = z_from_fp(vp);
    for (std::size_t i = 0; i < uz.size(); ++i) {
      if (g.size() <= i) g.resize(i + 1, Int(0));
      g[i] += pj * uz[i];
    }
    for (std::size_t i = 0; i < vz.size(); ++i) {
      if (h.size() <= i) h.resize(i + 1, Int(0));
      h[i] += pj * vz[i];
    }
    pj *= H.p;
    Int pj1 = pj * H.p;
    zmod_center(g, pj);
    zmod_center(h, pj);
    ztrim(g);
    ztrim(h);
  }
  zmod_center(g, H.pk);
  zmod_center(h, H.pk);
}

// Lift the whole factor list (binary split).
void hensel_tree(const HenselCtx& H, const ZP& f, std::vector<FpPoly>::const_iterator b,
                 std::vector<FpPoly>::const_iterator e, std::vector<ZP>& out) {
  if (e - b == 1) {
    ZP g = z_from_fp(*b);
    // f == g * 1 up to p^K after reduction: f mod p^K centered is the lift.
    ZP lifted = f;
    zmod_center(lifted, H.pk);
    out.push_back(lifted);
    return;
  }
  auto mid = b + (e - b) / 2;
  FpCtx K{H.p};
  FpPoly gp = {1}, hp = {1};
  for (auto it = b; it != mid; ++it) gp = fmul(K, gp, *it);
  for (auto it = mid; it != e; ++it) hp = fmul(K, hp, *it);
  ZP g = z_from_fp(gp), h = z_from_fp(hp);
  lift_pair(H, f, g, h);
  hensel_tree(H, g, b, mid, out);
  hensel_tree(H, h, mid, e, out);
}

Int max_abs(const ZP& a) {
  Int m = 0;
  for (const auto& c : a) {
    Int v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

// Factor a squarefree monic integer polynomial into monic irreducible Z-polys.
std::vector<ZP> factor_monic_squarefree_z(const ZP& f) {
  long n = zdeg(f);
  if (n <= 1) return {f};

  static const long primes[] = {3,    5,    7,    11,   13,   17,   19,   23,  29,
                                31,   37,   41,   43,   47,   53,   59,   61,  67,
                                71,   73,   79,   83,   89,   97,   101,  103, 107,
                                109,  113,  127,  131,  137,  139,  149,  151, 157,
                                163,  167,  173,  179,  181,  191,  193,  197, 199,
                                211,  223,  227,  229,  233,  239,  241,  251, 257,
                                263,  269,  271,  277,  281,  283,  293,  307, 311};
  FpCtx K{0};
  FpPoly fp;
  bool found = false;
  for (long p : primes) {
    K.p = p;
    fp = fp_from_z(K, f);
    if (fdeg(fp) != n) continue;  // lc vanished
    if (fdeg(fgcd(K, fp, fderiv(K, fp))) == 0) {
      found = true;
      break;
    }
  }
  if (!found) throw internal_error("no suitable prime for factorization");

  auto fac = factor_fp_squarefree(K, fmonic(K, fp));
  if (fac.size() == 1) return {f};
  std::sort(fac.begin(), fac.end());

  // Landau-Mignotte style bound for coefficients of any monic factor.
  Int B = max_abs(f);
  B = (B + 1) * (n + 1);
  Int two_n = int_pow(Int(2), static_cast<unsigned long>(n + 1));
  B *= two_n;
  HenselCtx H{K.p, Int(K.p), 1};
  while (H.pk <= 2 * B) {
    H.pk *= K.p;
    ++H.K;
  }

  std::vector<ZP> lifted;
  ZP fmodpk = f;
  zmod_center(fmodpk, H.pk);
  hensel_tree(H, fmodpk, fac.begin(), fac.end(), lifted);

  // Subset recombination.
  std::vector<ZP> result;
  ZP rem = f;
  std::vector<int> alive(lifted.size(), 1);
  long alive_count = static_cast<long>(lifted.size());
  for (long take = 1; take <= alive_count; ++take) {
    bool restart = true;
    while (restart && 2 * take <= alive_count) {
      restart = false;
      std::vector<long> idx;
      for (long i = 0; i < static_cast<long>(lifted.size()); ++i)
        if (alive[i]) idx.push_back(i);
      // iterate over subsets of size `take`
      std::vector<long> sel(take);
      std::iota(sel.begin(), sel.end(), 0);
      while (true) {
        ZP cand = {Int(1)};
        for (long s : sel) cand = zmul(cand, lifted[idx[s]]);
        zmod_center(cand, H.pk);
        ZP q;
        if (zdeg(cand) < zdeg(rem) && zdiv_monic(rem, cand, q)) {
          result.push_back(cand);
          for (long s : sel) alive[idx[s]] = 0;
          alive_count -= take;
          rem = q;
          restart = true;
          break;
        }
        // next subset
        long i = take - 1;
        while (i >= 0 && sel[i] == static_cast<long>(idx.size()) - take + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (long j = i + 1; j < take; ++j) sel[j] = sel[j - 1] + 1;
      }
    }
  }
  if (zdeg(rem) > 0) result.push_back(rem);
  return result;
}

}  // namespace

std::vector<std::pair<QPoly, int>> factor_qpoly(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.deg() <= 0) return out;
  for (auto& [sq, mult] : squarefree_decomposition(p)) {
    if (sq.deg() == 1) {
      out.emplace_back(sq, mult);
      continue;
    }
    // Clear denominators, then monicize: g(x) = lc^(n-1) * f(x/lc) is monic.
    Int den(1);
    for (const auto& c : sq.c) den = lcm(den, c.get_den());
    ZP zf(sq.c.size());
    for (std::size_t i = 0; i < sq.c.size(); ++i) {
      Rat v = sq.c[i] * Rat(den);
      zf[i] = v.get_num();
    }
    Int cont(0);
    for (const auto& c : zf) cont = gcd(cont, c);
    if (cont > 1)
      for (auto& c : zf) c /= cont;
    Int lc = zf.back();
    long n = zdeg(zf);
    ZP g(zf.size());
    // g_i = f_i * lc^(n-1-i)
    for (long i = 0; i <= n; ++i) g[i] = zf[i] * int_pow(lc, static_cast<unsigned long>(n - 1 - i >= 0 ? n - 1 - i : 0));
    if (lc < 0) { /* keep sign in x-substitution instead */ }
    // ensure monic: leading becomes lc^(n-1)*lc / lc^(n-1)... recompute directly
    // g(x) = lc^(n-1) f(x/lc): coefficient of x^i is f_i lc^(n-1-i); leading = f_n lc^(-1)... guard:
    // f_n * lc^(n-1-n) = f_n / lc = 1 only if treated as rational; do it rationally:
    {
      std::vector<Rat> gr(zf.size());
      for (long i = 0; i <= n; ++i)
        gr[i] = Rat(zf[i]) * rat_pow(Rat(lc), n - 1 - i);
      ZP gz(gr.size());
      for (std::size_t i = 0; i < gr.size(); ++i) {
        if (gr[i].get_den() != 1) throw internal_error("monicization produced a fraction");
        gz[i] = gr[i].get_num();
      }
      g = std::move(gz);
    }
    for (const auto& zfac : factor_monic_squarefree_z(g)) {
      // map back: h(x) = zfac(lc * x), then make monic over Q
      QPoly h;
      h.c.resize(zfac.size());
      for (std::size_t i = 0; i < zfac.size(); ++i)
        h.c[i] = Rat(zfac[i]) * rat_pow(Rat(lc), static_cast<long>(i));
      h.trim();
      out.emplace_back(monic(h), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return out;
}

bool irreducible_qpoly(const QPoly& p) {
  if (p.deg() < 1) throw internal_error("irreducibility asked of a constant");
  auto f = factor_qpoly(p);
  return f.size() == 1 && f[0].second == 1 && f[0].first.deg() == p.deg();
}

}  // namespace mf
