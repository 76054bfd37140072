#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "milnorfiber/upoly.hpp"

namespace mf {

struct Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of an algebraic tower Q(g1, g2, ..., gh). A height-0 element is a
// plain rational; a height-h element is a polynomial in g_h of degree less
// than deg(minpoly_h) with height-(h-1) coefficients. Normal form collapses
// constant tails, so equality is structural.
class TElem {
 public:
  TElem() : r_(0) {}
  TElem(long v) : r_(v) {}  // NOLINT: implicit by design (UPoly needs F(long))
  explicit TElem(const Rat& v) : r_(v) {}
  TElem(TowerPtr tw, int height, std::vector<TElem> coeffs);

  static TElem generator(const TowerPtr& tw, int level);  // 1-based level

  int height() const { return h_; }
  bool is_rational() const { return h_ == 0; }
  const Rat& rat() const;
  const std::vector<TElem>& coeffs() const { return c_; }
  const TowerPtr& tower() const { return tw_; }

  bool is_zero() const { return h_ == 0 && r_ == 0; }

  friend TElem operator+(const TElem& a, const TElem& b);
  friend TElem operator-(const TElem& a, const TElem& b);
  friend TElem operator*(const TElem& a, const TElem& b);
  friend TElem operator/(const TElem& a, const TElem& b);
  friend bool operator==(const TElem& a, const TElem& b);
  TElem inverse() const;
  TElem pow(long e) const;

  std::string str() const;

 private:
  void normalize();

  TowerPtr tw_;  // null for plain rationals
  int h_ = 0;
  Rat r_;                 // valid when h_ == 0
  std::vector<TElem> c_;  // valid when h_ > 0; size >= 2 after normalize
};

using TPoly = UPoly<TElem>;

// A tower of simple extensions of Q. Every minimal polynomial is monic and
// certified irreducible over the level below it (certification = the level
// was produced by complete factorization).
struct Tower {
  struct Level {
    std::string name;
    std::vector<TElem> minpoly;  // ascending, monic, coeffs of lower height
  };
  std::vector<Level> levels;

  int height() const { return static_cast<int>(levels.size()); }
  long level_degree(int level) const {  // 1-based
    return static_cast<long>(levels[level - 1].minpoly.size()) - 1;
  }
  long degree() const {
    long d = 1;
    for (int i = 1; i <= height(); ++i) d *= level_degree(i);
    return d;
  }

  static TowerPtr rationals();
  // Extends `base` by a root of `minpoly` (monic over base). The polynomial
  // must be irreducible; callers obtain it from factor_over_tower.
  static TowerPtr extend(const TowerPtr& base, const TPoly& minpoly, const std::string& name);
};

// True if `tw` extends `prefix` level by level (or equals it).
bool tower_extends(const TowerPtr& tw, const TowerPtr& prefix);

// Complete factorization into monic irreducible factors with multiplicities
// over the full tower (Trager's method, recursing down the levels).
std::vector<std::pair<TPoly, int>> factor_over_tower(const TPoly& p, const TowerPtr& tw);

// Convenience: the coefficients of p as rationals (throws if any is not).
QPoly tpoly_to_qpoly(const TPoly& p);
TPoly qpoly_to_tpoly(const QPoly& p);

}  // namespace mf
