#include "knotasym/torus.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace knotasym {

namespace {

// dense polynomial in t, coeffs[k] = coefficient of t^k
using Poly = std::vector<Rational>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// exact division, throws if a remainder survives
Poly div_exact(Poly a, const Poly& b) {
  size_t db = b.size();
  while (db > 0 && b[db - 1] == 0) --db;
  if (db == 0) throw std::domain_error("poly division by zero");
  if (a.size() < db) a.resize(db, Rational(0));
  Poly q(a.size() - db + 1, Rational(0));
  for (size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + db - 1] / b[db - 1];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < db; ++j) a[i + j] -= c * b[j];
  }
  for (const auto& c : a)
    if (c != 0) throw std::domain_error("poly division not exact");
  return q;
}

Poly binom(long n) {  // t^n - 1
  Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

LaurentSeries from_poly(const Poly& p, long shift) {
  std::vector<Rational> c = p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return LaurentSeries::zero("t", 0, true);
  return LaurentSeries("t", shift, std::move(c), shift + (long)c.size() - 1, true);
}

void check_params(long p, long q) {
  if (p < 1 || q < 0) throw std::invalid_argument("torus knot: p >= 1, q >= 0");
  if (q == 0 && p != 1) throw std::invalid_argument("torus knot: q=0 needs p=1");
  if (q > 0 && std::gcd(p, q) != 1) throw std::invalid_argument("torus knot: gcd(p,q)=1");
}

}  // namespace

LaurentSeries alexander_torus(long p, long q) {
  check_params(p, q);
  if (p == 1 || q == 1) return LaurentSeries::constant("t", 1);
  Poly num = mul(binom(p * q), binom(1));
  Poly res = div_exact(div_exact(num, binom(p)), binom(q));
  return from_poly(res, -(p - 1) * (q - 1) / 2);
}

LaurentSeries jones_torus(long p, long q) {
  check_params(p, q);
  if (p == 1 || q == 1) return LaurentSeries::constant("t", 1);
  // 1 - t^{p+1} - t^{q+1} + t^{p+q}
  Poly num(p + q + 1, Rational(0));
  num[0] += 1;
  num[p + 1] -= 1;
  num[q + 1] -= 1;
  num[p + q] += 1;
  Poly den(3, Rational(0));
  den[0] = 1;
  den[2] = -1;
  Poly res = div_exact(num, den);
  return from_poly(res, (p - 1) * (q - 1) / 2);
}

LaurentSeries normalized_series(const LaurentSeries& poly, const Rational& c, long order) {
  if (!poly.exact()) throw std::invalid_argument("normalized_series needs an exact polynomial");
  LaurentSeries acc = LaurentSeries::zero("h", order);
  for (long k = poly.lowest(); k <= poly.order(); ++k) {
    Rational ck = poly.coeff(k);
    if (ck == 0) continue;
    acc = acc + ck * exp_series("h", c * k, order);
  }
  return acc;
}

Rational v2_from_alexander(long p, long q) {
  return normalized_series(alexander_torus(p, q), Rational(1), 2).coeff(2);
}

}  // namespace knotasym
