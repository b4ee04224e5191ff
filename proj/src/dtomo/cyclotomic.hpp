#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dtomo/rational.hpp"

namespace dtomo {

// Element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1), reduced
// modulo the m-th cyclotomic polynomial. Representation is canonical, so
// equality at a common order is coefficient equality. Binary operations
// promote both operands to the lcm of their orders; no automatic order
// minimization happens.
class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1) {}
  explicit CycNum(const Rational& value) : order_(1), coeffs_{value} {}
  explicit CycNum(long value) : order_(1), coeffs_{Rational(value)} {}

  // Sum of coeff * zeta_m^exponent terms; exponents reduced mod m.
  static CycNum make(unsigned m, const std::vector<std::pair<unsigned, Rational>>& monomials);
  static CycNum zeta(unsigned m, unsigned exponent = 1);
  static CycNum zero(unsigned m);
  static CycNum one(unsigned m) { return make(m, {{0, Rational(1)}}); }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;      // all coefficients beyond the constant vanish
  Rational rational_value() const;  // requires is_rational()

  CycNum promoted(unsigned m2) const;  // requires order() | m2

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  CycNum operator*(const Rational& s) const;

  CycNum inverse() const;  // throws DivisionByZero on 0
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

  // Image under the automorphism zeta_m -> zeta_m^a; requires gcd(a, m) = 1.
  CycNum galois(unsigned a) const;
  CycNum conj() const { return order_ == 1 ? *this : galois(order_ - 1); }
  bool is_real() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }
  // Total order usable as a map key (promotes to a common order first).
  static int compare(const CycNum& a, const CycNum& b);

  std::string str() const;  // debug-ish "c0 + c1*z^1 + ..." form

 private:
  CycNum(unsigned m, std::vector<Rational> c) : order_(m), coeffs_(std::move(c)) {}
  static CycNum from_long_poly(unsigned m, std::vector<Rational> poly);

  unsigned order_;
  std::vector<Rational> coeffs_;  // length phi(order_)
};

unsigned euler_phi(unsigned m);
// Integer coefficients of the m-th cyclotomic polynomial, low to high.
const std::vector<Int>& cyclotomic_polynomial(unsigned m);

struct CycNumLess {
  bool operator()(const CycNum& a, const CycNum& b) const { return CycNum::compare(a, b) < 0; }
};

}  // namespace dtomo
