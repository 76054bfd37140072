#include "milnorfiber/cyclo.hpp"

namespace mf {

CycloProduct cyclo_multiply(const CycloProduct& a, const CycloProduct& b) {
  CycloProduct r = a;
  for (const auto& [k, e] : b.exps) r.mul_factor(k, e);
  return r;
}

CycloProduct cyclo_invert(const CycloProduct& a) {
  CycloProduct r;
  for (const auto& [k, e] : a.exps) r.exps[k] = -e;
  return r;
}

long valuation_at_infinity(const CycloProduct& z) {
  long v = 0;
  for (const auto& [k, e] : z.exps) v -= k * e;
  return v;
}

std::map<long, long> cyclotomic_exponents(const CycloProduct& z) {
  // 1 - t^k = -prod_{d | k} Phi_d(t).
  std::map<long, long> out;
  for (const auto& [k, e] : z.exps) {
    for (long d = 1; d <= k; ++d) {
      if (k % d) continue;
      auto [it, ins] = out.emplace(d, e);
      if (!ins) {
        it->second += e;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

bool equal_as_rational_functions(const CycloProduct& a, const CycloProduct& b) {
  // 1 - t^k = -(t^k - 1) = -prod_{d|k} Phi_d, so besides the Phi exponents
  // the sign (-1)^(sum e_k) must agree.
  long sa = 0, sb = 0;
  for (const auto& [k, e] : a.exps) sa += e;
  for (const auto& [k, e] : b.exps) sb += e;
  if (((sa - sb) % 2 + 2) % 2 != 0) return false;
  return cyclotomic_exponents(a) == cyclotomic_exponents(b);
}

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

CycloExpanded cyclo_expand(const CycloProduct& z) {
  CycloExpanded r;
  r.num = {Int(1)};
  r.den = {Int(1)};
  for (const auto& [k, e] : z.exps) {
    std::vector<Int> f(static_cast<std::size_t>(k) + 1, Int(0));
    f[0] = 1;
    f[k] = -1;
    long n = e > 0 ? e : -e;
    for (long i = 0; i < n; ++i) {
      if (e > 0)
        r.num = poly_mul(r.num, f);
      else
        r.den = poly_mul(r.den, f);
    }
  }
  return r;
}

std::string cyclo_str(const CycloProduct& z) {
  if (z.exps.empty()) return "1";
  std::string s;
  for (const auto& [k, e] : z.exps) {
    s += "(1-t";
    if (k != 1) s += "^" + std::to_string(k);
    s += ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace mf
