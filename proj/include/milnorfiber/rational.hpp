#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mf {

using Int = mpz_class;
using Rat = mpq_class;

// Input/data problems the caller can act on (bad germ, bad file, ...).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax errors carry a 0-based character position into the offending text.
class parse_error : public input_error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : input_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Bug indicators: a self-check failed, a bounded search ran out, ...
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (e < 0) {
    if (r == 0) throw internal_error("rat_pow: negative power of zero");
    r = Rat(1) / r;
  }
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace mf
