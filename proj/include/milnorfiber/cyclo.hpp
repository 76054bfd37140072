#pragma once

#include <map>
#include <string>
#include <vector>

#include "milnorfiber/upoly.hpp"

namespace mf {

// A zeta function kept in factored form: prod_k (1 - t^k)^(e_k).
// The empty map represents 1; no zero exponents are stored.
struct CycloProduct {
  std::map<long, long> exps;  // k -> e_k, e_k != 0

  void mul_factor(long k, long e) {
    if (e == 0) return;
    auto [it, ins] = exps.emplace(k, e);
    if (!ins) {
      it->second += e;
      if (it->second == 0) exps.erase(it);
    }
  }
  bool operator==(const CycloProduct& o) const { return exps == o.exps; }
};

CycloProduct cyclo_multiply(const CycloProduct& a, const CycloProduct& b);
CycloProduct cyclo_invert(const CycloProduct& a);

// Valuation at infinity of the rational function: -sum k*e_k.
long valuation_at_infinity(const CycloProduct& z);

// Exponent of the cyclotomic polynomial Phi_d in the product, for every d
// dividing some stored k. Two products are equal as rational functions iff
// these maps are equal.
std::map<long, long> cyclotomic_exponents(const CycloProduct& z);

bool equal_as_rational_functions(const CycloProduct& a, const CycloProduct& b);

// Expanded numerator / denominator with integer coefficients.
struct CycloExpanded {
  std::vector<Int> num;  // ascending
  std::vector<Int> den;
};
CycloExpanded cyclo_expand(const CycloProduct& z);

// "(1-t^6)(1-t^2)^-1(1-t^3)^-1"; "1" for the empty product.
std::string cyclo_str(const CycloProduct& z);

}  // namespace mf
