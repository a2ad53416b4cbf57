#pragma once

// Fixed series used by the diagram calculus:
//   F(h)   = 1/2 log( sinh(h/2) / (h/2) )      (even, starts h^2/48)
//   F+(h)  = 1/2 log( sinh(h/2) ) = F(h) + 1/2 log(h/2); only its
//            derivatives are series, F+'(h) = 1/4 coth(h/2) = 1/(2h) + ...

#include "knotasym/laurent.hpp"

namespace knotasym {

// sinh(h/2)/(h/2) = sum_k (h/2)^{2k} / (2k+1)!
inline LaurentSeries sinh_half_ratio(long order, const std::string& var = "h") {
  std::vector<Rational> c(order + 1, Rational(0));
  Rational pw(1);  // (1/2)^{2k} / (2k+1)!
  for (long k = 0; 2 * k <= order; ++k) {
    if (k > 0) {
      pw /= 4;
      pw /= (long)(2 * k);
      pw /= (long)(2 * k + 1);
    }
    c[2 * k] = pw;
  }
  return LaurentSeries(var, 0, std::move(c), order, false);
}

inline LaurentSeries wheel_series_F(long order, const std::string& var = "h") {
  return Rational(1, 2) * series_log(sinh_half_ratio(order, var));
}

// F+^(n) for n >= 1, as a Laurent series with pole part
// (-1)^(n-1) (n-1)! / (2 h^n).  F+' = (e^h + 1) / (4 (e^h - 1)) * 2 ... =
// 1/4 coth(h/2); computed by exact series division.
inline LaurentSeries f_plus_deriv(int n, long order, const std::string& var = "h") {
  if (n < 1) throw std::invalid_argument("f_plus_deriv: n >= 1");
  long work = order + n + 2;
  LaurentSeries e = exp_series(var, Rational(1), work);
  LaurentSeries one = LaurentSeries::constant(var, 1);
  LaurentSeries d = Rational(1, 4) * ((e + one) / (e - one));
  for (int i = 1; i < n; ++i) d = d.derivative();
  return d.truncated(order);
}

}  // namespace knotasym
