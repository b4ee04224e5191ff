#include "dtomo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace dtomo {

namespace {

// Per-order data: Phi_m and reduction rows x^e mod Phi_m for phi(m) <= e < bound.
struct OrderContext {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<Int> phi_poly;                  // degree phi, monic
  std::vector<std::vector<Int>> rows;         // rows[e - phi] = x^e mod Phi, integer
  unsigned row_bound = 0;                     // rows cover exponents [phi, row_bound)
};

std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Exact division of integer polynomials (remainder must vanish).
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
  int db = static_cast<int>(b.size()) - 1;
  std::vector<Int> q(a.size() - db, Int(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Int c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const Int& r : a)
    if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

std::map<unsigned, OrderContext>& context_cache() {
  static std::map<unsigned, OrderContext> cache;
  return cache;
}
std::mutex& context_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<Int> compute_phi_poly(unsigned m) {
  if (m == 1) return {Int(-1), Int(1)};
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  std::vector<Int> den{Int(1)};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) den = poly_mul_int(den, cyclotomic_polynomial(d));
  }
  return poly_div_exact(std::move(num), den);
}

const OrderContext& context(unsigned m) {
  std::lock_guard<std::mutex> lock(context_mutex());
  auto& cache = context_cache();
  auto it = cache.find(m);
  if (it == cache.end()) {
    OrderContext ctx;
    ctx.m = m;
    ctx.phi_poly = compute_phi_poly(m);
    ctx.phi = static_cast<unsigned>(ctx.phi_poly.size()) - 1;
    unsigned bound = std::max(m, 2 * ctx.phi > 0 ? 2 * ctx.phi - 1 : 1);
    ctx.rows.reserve(bound > ctx.phi ? bound - ctx.phi : 0);
    // row for exponent phi: x^phi = -(Phi - x^phi)
    std::vector<Int> cur(ctx.phi, Int(0));
    for (unsigned j = 0; j < ctx.phi; ++j) cur[j] = -ctx.phi_poly[j];
    for (unsigned e = ctx.phi; e < bound; ++e) {
      ctx.rows.push_back(cur);
      // next = x * cur mod Phi
      std::vector<Int> next(ctx.phi, Int(0));
      Int top = cur.empty() ? Int(0) : cur[ctx.phi - 1];
      for (unsigned j = ctx.phi - 1; j > 0; --j) next[j] = cur[j - 1];
      next[0] = 0;
      if (top != 0) {
        for (unsigned j = 0; j < ctx.phi; ++j) next[j] -= top * ctx.phi_poly[j];
      }
      cur = std::move(next);
    }
    ctx.row_bound = bound;
    it = cache.emplace(m, std::move(ctx)).first;
  }
  return it->second;
}

}  // namespace

unsigned euler_phi(unsigned m) { return context(m).phi; }

const std::vector<Int>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<Int>> polys;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = polys.find(m);
    if (it != polys.end()) return it->second;
  }
  std::vector<Int> p = compute_phi_poly(m);
  std::lock_guard<std::mutex> lock(mu);
  return polys.emplace(m, std::move(p)).first->second;
}

CycNum CycNum::from_long_poly(unsigned m, std::vector<Rational> poly) {
  const OrderContext& ctx = context(m);
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (size_t e = 0; e < poly.size(); ++e) {
    if (poly[e] == 0) continue;
    if (e < ctx.phi) {
      out[e] += poly[e];
    } else {
      const std::vector<Int>& row = ctx.rows.at(e - ctx.phi);
      for (unsigned j = 0; j < ctx.phi; ++j) {
        if (row[j] != 0) out[j] += poly[e] * Rational(row[j]);
      }
    }
  }
  return CycNum(m, std::move(out));
}

CycNum CycNum::make(unsigned m, const std::vector<std::pair<unsigned, Rational>>& monomials) {
  if (m < 1) throw Error(Errc::OrderTooSmall, "order must be >= 1");
  std::vector<Rational> poly(m, Rational(0));
  for (const auto& [e, c] : monomials) poly[e % m] += c;
  return from_long_poly(m, std::move(poly));
}

CycNum CycNum::zeta(unsigned m, unsigned exponent) { return make(m, {{exponent, Rational(1)}}); }

CycNum CycNum::zero(unsigned m) {
  const OrderContext& ctx = context(m);
  return CycNum(m, std::vector<Rational>(ctx.phi, Rational(0)));
}

bool CycNum::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error(Errc::NotReal, "element is not rational");
  return coeffs_[0];
}

CycNum CycNum::promoted(unsigned m2) const {
  if (m2 == order_) return *this;
  if (m2 % order_ != 0)
    throw Error(Errc::NotADivisor, "target order is not a multiple of current order");
  unsigned t = m2 / order_;
  std::vector<Rational> poly(m2, Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) poly[j * t] += coeffs_[j];
  return from_long_poly(m2, std::move(poly));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) out[j] = -coeffs_[j];
  return CycNum(order_, std::move(out));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  unsigned m = lcm_u(a.order_, b.order_);
  CycNum pa = a.promoted(m), pb = b.promoted(m);
  for (size_t j = 0; j < pa.coeffs_.size(); ++j) pa.coeffs_[j] += pb.coeffs_[j];
  return pa;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  unsigned m = lcm_u(a.order_, b.order_);
  CycNum pa = a.promoted(m), pb = b.promoted(m);
  for (size_t j = 0; j < pa.coeffs_.size(); ++j) pa.coeffs_[j] -= pb.coeffs_[j];
  return pa;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  unsigned m = lcm_u(a.order_, b.order_);
  CycNum pa = a.promoted(m), pb = b.promoted(m);
  size_t na = pa.coeffs_.size(), nb = pb.coeffs_.size();
  std::vector<Rational> prod(na + nb - 1, Rational(0));
  for (size_t i = 0; i < na; ++i) {
    if (pa.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < nb; ++j) {
      if (pb.coeffs_[j] != 0) prod[i + j] += pa.coeffs_[i] * pb.coeffs_[j];
    }
  }
  return CycNum::from_long_poly(m, std::move(prod));
}

CycNum CycNum::operator*(const Rational& s) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) out[j] = coeffs_[j] * s;
  return CycNum(order_, std::move(out));
}

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

Poly poly_divmod(Poly& a, const Poly& b) {
  int db = static_cast<int>(b.size()) - 1;
  Poly q(std::max<int>(1, static_cast<int>(a.size()) - db), Rational(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  poly_trim(a);
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    CycNum out = *this;
    out.coeffs_[0] = Rational(1) / coeffs_[0];
    return out;
  }
  const std::vector<Int>& phi_int = cyclotomic_polynomial(order_);
  Poly r0(phi_int.size());
  for (size_t j = 0; j < phi_int.size(); ++j) r0[j] = Rational(phi_int[j]);
  Poly r1 = coeffs_;
  poly_trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (!poly_is_zero(r1)) {
    Poly a = r0;
    Poly q = poly_divmod(a, r1);
    r0 = r1;
    r1 = std::move(a);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant (Phi_m is irreducible over Q).
  if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("cyclotomic gcd not constant");
  Rational scale = Rational(1) / r0[0];
  for (Rational& c : s0) c *= scale;
  return from_long_poly(order_, std::move(s0));
}

CycNum CycNum::galois(unsigned a) const {
  a %= order_;
  if (gcd_u(a, order_) != 1)
    throw Error(Errc::NotAUnit, "galois exponent not a unit mod order");
  if (a == 1) return *this;
  std::vector<Rational> poly(order_, Rational(0));
  for (size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) poly[(j * a) % order_] += coeffs_[j];
  return from_long_poly(order_, std::move(poly));
}

bool CycNum::is_real() const { return conj() == *this; }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned m = lcm_u(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  unsigned m = lcm_u(a.order_, b.order_);
  CycNum pa = a.promoted(m), pb = b.promoted(m);
  for (size_t j = 0; j < pa.coeffs_.size(); ++j) {
    int c = cmp(pa.coeffs_[j], pb.coeffs_[j]);
    if (c != 0) return c;
  }
  return 0;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(coeffs_[j]);
    if (j > 0) os << "*z" << order_ << "^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dtomo
