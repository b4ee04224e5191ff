#pragma once

#include <string>

#include "dtomo/cyclotomic.hpp"

namespace dtomo {

// Sign of a real cyclotomic number. Exact zero is detected from the canonical
// coefficient vector; otherwise the value is enclosed by a dyadic interval
// (directed-rounding evaluation of sum c_j cos(2*pi*j/m)) whose precision
// doubles from 64 bits until 0 falls outside. Throws NotReal for non-real
// input and PrecisionExhausted past the cap (default 4096 bits, overridable
// via DT_PRECISION_CAP_BITS).
int real_sign(const CycNum& x);

// Sign assuming the caller already knows x is real (skips the conjugation check).
int real_sign_unchecked(const CycNum& x);

// cmp of two real cyclotomic numbers: sign of a - b.
int real_cmp(const CycNum& a, const CycNum& b);

unsigned precision_cap_bits();
void set_precision_cap_bits(unsigned bits);

// Decimal rendering of the real value of x with `digits` significant digits,
// round-to-nearest (ties to even). Used only at emission time.
std::string real_decimal(const CycNum& x, unsigned digits);
// Same for the imaginary part.
std::string imag_decimal(const CycNum& x, unsigned digits);

// Convenience enclosure as doubles [lo, hi] of the real part (outward rounded).
std::pair<double, double> real_enclosure(const CycNum& x, unsigned bits = 128);
std::pair<double, double> imag_enclosure(const CycNum& x, unsigned bits = 128);

}  // namespace dtomo
