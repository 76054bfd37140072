#pragma once

#include <string>
#include <vector>

#include "milnorfiber/bipoly.hpp"

namespace mf {

// Order of vanishing at x = 0 of Res_y(f, g) in generic coordinates: the
// intersection multiplicity i0(f, g). Genericity is certified empirically by
// agreement under two distinct shears; disagreement raises internal_error.
long intersection_multiplicity_resultant(const BiPoly& f, const BiPoly& g);

// mu = i0(df/dx, df/dy); requires a reduced germ with an isolated singular
// point at the origin (gcd of the partials constant). Smooth germs give 0.
long milnor_number(const BiPoly& f);

struct CheckItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ConsistencyReport {
  std::string input_f, input_g;
  std::vector<CheckItem> checks;
  bool pass = true;

  void add(const std::string& name, const std::string& expected, const std::string& actual) {
    bool ok = expected == actual;
    checks.push_back({name, expected, actual, ok});
    pass = pass && ok;
  }
  void add_error(const std::string& name, const std::string& what) {
    checks.push_back({name, "no error", what, false});
    pass = false;
  }
};

// Runs the full cross-check battery on a germ pair: Noether vs resultant,
// total-transform vanishing, determinant +-1, chi = nu(zeta),
// chi_from_description = euler_char, invariance under one free blowup, and
// (Case I with f reduced) nu(zeta_Phi) = nu(zeta_f) = 1 - mu.
ConsistencyReport consistency_report(const BiPoly& f, const BiPoly& g);

}  // namespace mf
