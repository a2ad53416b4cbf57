#pragma once

// Exact rational scalar used throughout: GMP-backed, never implicitly
// converted to floating point.  The helpers here pin down the textual
// wire format ("num/den", canonical sign on the numerator) and a decimal
// rendering used only for report output.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotasym {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

// "num/den" with canonical sign; integers render without the "/1".
inline std::string rat_to_string(const Rational& r) {
  return r.get_str();
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool inv = e < 0;
  unsigned long n = inv ? -static_cast<unsigned long>(e) : e;
  if (inv) {
    if (b == 0) throw std::domain_error("0^negative");
    b = 1 / b;
  }
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Decimal rendering with a fixed number of significant digits, round half
// away from zero.  Used for human-readable report columns; the exact value
// always travels alongside it.
inline std::string rat_to_decimal(const Rational& r, int sig_digits = 12) {
  if (r == 0) return "0";
  bool neg = r < 0;
  Rational a = rat_abs(r);
  // scale so that 10^(sig-1) <= a*10^k < 10^sig
  int k = 0;
  Rational lo = rat_pow(rat(10), sig_digits - 1);
  Rational hi = lo * 10;
  Rational scaled = a;
  while (scaled < lo) { scaled *= 10; ++k; }
  while (scaled >= hi) { scaled /= 10; --k; }
  // round to integer
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem * 2 >= den) q += 1;
  std::string digits = q.get_str();
  if ((int)digits.size() > sig_digits) { digits.pop_back(); --k; }  // 999.. rounded up
  int exp10 = (int)digits.size() - 1 - k;  // value = 0.digits * 10^(exp10+1)
  // trim trailing zeros
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out = neg ? "-" : "";
  if (exp10 >= 0 && exp10 < (int)digits.size()) {
    out += digits.substr(0, exp10 + 1);
    if (exp10 + 1 < (int)digits.size()) out += "." + digits.substr(exp10 + 1);
  } else if (exp10 >= (int)digits.size() && exp10 < sig_digits + 4) {
    out += digits + std::string(exp10 + 1 - digits.size(), '0');
  } else if (exp10 < 0 && exp10 > -5) {
    out += "0." + std::string(-exp10 - 1, '0') + digits;
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp10);
  }
  return out;
}

}  // namespace knotasym
