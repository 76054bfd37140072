#pragma once

#include <utility>
#include <vector>

#include "milnorfiber/upoly.hpp"

namespace mf {

// Factorization of univariate polynomials over Q (Zassenhaus: Cantor-Zassenhaus
// mod p, linear Hensel lifting, subset recombination). Factors are monic and
// irreducible; the rational unit is dropped.
std::vector<std::pair<QPoly, int>> factor_qpoly(const QPoly& p);

// deg(p) >= 1 required.
bool irreducible_qpoly(const QPoly& p);

}  // namespace mf
