#pragma once

#include <gmpxx.h>

#include <string>

#include "dtomo/errors.hpp"

namespace dtomo {

using Int = mpz_class;
using Rational = mpq_class;  // canonicalized by GMP: gcd(|num|,den)=1, den>0

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

// Canonical "p/q" form; "/1" omitted.
inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw Error(Errc::MalformedInput, "not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline unsigned lcm_u(unsigned a, unsigned b) {
  Int r = lcm(Int(a), Int(b));
  return static_cast<unsigned>(r.get_ui());
}

inline unsigned gcd_u(unsigned a, unsigned b) {
  while (b) {
    unsigned t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace dtomo
