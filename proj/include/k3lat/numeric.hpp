#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace k3lat {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat a rational in lowest terms with positive denominator
// (gmp canonicalizes on construction).
using Int = mpz_class;
using Rat = mpq_class;

// the two-argument mpq_class constructor does not reduce; always build
// rationals through here
inline Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int to_int(const Rat& q) {
  // caller guarantees q is integral
  return Int(q.get_num() / q.get_den());
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// floor(a/b) for arbitrary signs
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// nearest integer to a/b (ties toward +inf; any fixed rule works for reduction)
inline Int round_div(const Int& a, const Int& b) {
  Int two_a = 2 * a + b;
  return floor_div(two_a, 2 * b);
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// canonical representative of q mod 2Z in (-2, 0]
inline Rat mod2(const Rat& q) {
  Rat two(2);
  Rat r = q - two * Rat(floor_div(q.get_num(), 2 * q.get_den()));
  // r in [0,2); shift to (-2,0]
  if (r > 0) r -= two;
  return r;
}

// canonical representative of q mod Z in [0, 1)
inline Rat mod1(const Rat& q) {
  return q - Rat(floor_div(q.get_num(), q.get_den()));
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace k3lat
