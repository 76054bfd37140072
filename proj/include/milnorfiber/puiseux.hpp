#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnorfiber/bipoly.hpp"
#include "milnorfiber/tower.hpp"

namespace mf {

// One Galois orbit of Puiseux expansions of a C-irreducible branch, in the
// sheared frame (x <- x + c*y applied so the leading forms contain y^mult).
// The rational parametrization is x = lambda * t^e, y = series(t); conjugate
// branches are represented once, with orbit_size counting them.
struct PuiseuxBranch {
  int germ = 0;       // 0 = f, 1 = g (0 in plane-curve mode)
  long alpha = 1;     // multiplicity of this branch in the germ
  long e = 1;         // ramification index
  long orbit_size = 1;
  std::vector<Rat> char_exponents;   // strictly increasing, > 1
  std::vector<long> mult_sequence;   // Euclidean expansion of the above
  // Conjugate splitting profile: (exponent, cumulative number of blocks the
  // orbit's members fall into once that exponent is passed). Ends with
  // (.., orbit_size) when orbit_size > 1.
  std::vector<std::pair<Rat, long>> splitting;

  // Parametrization data (tower-valued; not serialized across modules).
  TowerPtr tower;
  TElem lambda;
  std::map<long, TElem> series;  // t-exponent -> coefficient
  Rat trunc_exponent;            // series exact up to (and incl.) e*trunc in t

  long mult_at_origin() const { return mult_sequence.empty() ? 1 : mult_sequence.front(); }
};

// Contact data for an unordered pair of branch orbits.
struct ContactRecord {
  int b1 = 0, b2 = 0;        // indices into the expansion's branch list
  Rat contact_exponent;      // max over conjugate pairs, sheared x-units
  long intersection_multiplicity = 0;  // total over all conjugate pairs
  // Shared conjugacy levels before the orbits part ways: (exponent, number of
  // blocks). Instances i of b1 and j of b2 diverge at the first level where
  // i/(s1/n) != j/(s2/n); pairs agreeing through every level diverge at
  // contact_exponent.
  std::vector<std::pair<Rat, long>> prefix_levels;
  // Divergence exponents per conjugate pair class: (exponent, pair count).
  std::vector<std::pair<Rat, long>> profile;
};

// Joint Newton-Puiseux expansion of a germ pair (or a single germ).
struct PairExpansion {
  long shear_c = 1;  // common shear actually applied
  BiPoly f_sheared, g_sheared;
  bool curve_only = false;
  std::vector<PuiseuxBranch> branches;   // f-branches first, then g-branches
  std::vector<ContactRecord> contacts;   // all unordered pairs

  // divergence exponent between unfolded instances (bi, ii) and (bj, ij)
  Rat instance_divergence(int bi, long ii, int bj, long ij) const;
};

// Expand both germs over a common shear. g may be the zero polynomial to
// request plane-curve mode. Throws input_error for zero/unit germs or a
// common factor.
PairExpansion expand_pair(const BiPoly& f, const BiPoly& g, bool curve_only);

// Branches of a single germ (plane-curve mode helper).
std::vector<PuiseuxBranch> puiseux_branches(const BiPoly& p);

// Symmetric lookup of the contact record computed by the joint expansion.
const ContactRecord& contact(const PairExpansion& ex, int b1, int b2);

struct VanishCertificate {
  bool ok = false;
  long checked_t_order = 0;  // p(x(t), y(t)) = O(t^(checked+1)) verified
  std::string detail;
};

// Substitutes the truncated parametrization into p and verifies that all
// low-order terms vanish up to the declared truncation bound.
VanishCertificate verify_branch(const BiPoly& p_sheared, const PuiseuxBranch& b);

// Smallest |c| >= 1 making the leading forms of all given germs y-regular.
long choose_shear(const std::vector<BiPoly>& germs);
// The next larger valid shear (for the oracle's two-shear genericity check).
long next_shear(const std::vector<BiPoly>& germs, long after);

// mult sequence from characteristic exponents by the classical Euclidean
// expansion (exponents in x-units, > 1; e = ramification).
std::vector<long> mult_sequence_from_chars(long e, const std::vector<Rat>& chars);

}  // namespace mf
