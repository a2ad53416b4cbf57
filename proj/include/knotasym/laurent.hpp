#pragma once

// Truncated Laurent series with explicit truncation order, plus exact
// Laurent polynomials (the `exact` flag marks that every coefficient above
// `order` is genuinely zero, not merely unknown).  Knot polynomials in t and
// expansion series in h share this type and are told apart by the variable
// tag; mixing tags in arithmetic is an error.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotasym/rational.hpp"

namespace knotasym {

class LaurentSeries {
 public:
  LaurentSeries() : var_("h"), lowest_(1), order_(0), exact_(true) {}

  // zero series truncated at `order` (unknown above), or exact zero
  static LaurentSeries zero(const std::string& var, long order, bool exact = false) {
    LaurentSeries s;
    s.var_ = var;
    s.lowest_ = order + 1;
    s.order_ = order;
    s.exact_ = exact;
    return s;
  }

  static LaurentSeries monomial(const std::string& var, const Rational& c, long exponent) {
    LaurentSeries s;
    s.var_ = var;
    s.exact_ = true;
    if (c == 0) {
      s.lowest_ = 1;
      s.order_ = 0;
    } else {
      s.lowest_ = exponent;
      s.order_ = exponent;
      s.coeffs_.push_back(c);
    }
    return s;
  }

  static LaurentSeries constant(const std::string& var, const Rational& c) {
    return monomial(var, c, 0);
  }

  LaurentSeries(std::string var, long lowest, std::vector<Rational> coeffs, long order,
                bool exact = false)
      : var_(std::move(var)), lowest_(lowest), coeffs_(std::move(coeffs)), order_(order),
        exact_(exact) {
    if (order_ - lowest_ + 1 != (long)coeffs_.size())
      throw std::invalid_argument("laurent: coefficient count != order-lowest+1");
    normalize();
  }

  const std::string& var() const { return var_; }
  long lowest() const { return lowest_; }
  long order() const { return order_; }
  bool exact() const { return exact_; }
  bool is_zero() const { return coeffs_.empty(); }

  // coefficient of var^k; unknown coefficients of a truncated series throw
  Rational coeff(long k) const {
    if (k < lowest_) return Rational(0);
    if (k > order_) {
      if (exact_) return Rational(0);
      throw std::out_of_range("laurent: coefficient beyond truncation order");
    }
    return coeffs_[k - lowest_];
  }

  long valuation() const {
    if (coeffs_.empty()) return order_ + 1;
    return lowest_;
  }

  LaurentSeries truncated(long new_order) const {
    LaurentSeries s = *this;
    if (new_order < s.order_ || !exact_) {
      if (new_order < s.lowest_ - 1) new_order = s.lowest_ - 1;
      if (new_order < s.order_) {
        s.coeffs_.resize(new_order - s.lowest_ + 1);
        s.order_ = new_order;
        s.exact_ = false;
      } else if (!exact_) {
        // cannot extend knowledge
      }
    } else if (new_order > s.order_) {
      // exact: higher coefficients are known zeros
      s.coeffs_.resize(new_order - s.lowest_ + 1, Rational(0));
      s.order_ = new_order;
    }
    s.normalize();
    return s;
  }

  LaurentSeries operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    check_vars(a, b);
    long order;
    bool exact = a.exact_ && b.exact_;
    if (exact)
      order = std::max(a.order_, b.order_);
    else if (a.exact_)
      order = b.order_;
    else if (b.exact_)
      order = a.order_;
    else
      order = std::min(a.order_, b.order_);
    long lowest = std::min(a.valuation(), b.valuation());
    if (lowest > order) return zero(a.var_, order, exact);
    std::vector<Rational> c(order - lowest + 1, Rational(0));
    for (long k = lowest; k <= order; ++k) {
      Rational v(0);
      if (k >= a.valuation() && (k <= a.order_ || a.exact_)) v += a.coeff(k);
      if (k >= b.valuation() && (k <= b.order_ || b.exact_)) v += b.coeff(k);
      c[k - lowest] = v;
    }
    return LaurentSeries(a.var_, lowest, std::move(c), order, exact);
  }

  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    check_vars(a, b);
    bool exact = a.exact_ && b.exact_;
    if (a.is_zero() || b.is_zero()) {
      if (exact) return zero(a.var_, 0, true);
      long order = exact ? 0
                 : std::min(a.exact_ ? b.order_ : a.order_ + b.valuation(),
                            b.exact_ ? a.order_ : b.order_ + a.valuation());
      return zero(a.var_, order, exact);
    }
    long lowest = a.lowest_ + b.lowest_;
    long order;
    if (exact)
      order = a.order_ + b.order_;
    else if (a.exact_)
      order = b.order_ + a.lowest_;
    else if (b.exact_)
      order = a.order_ + b.lowest_;
    else
      order = std::min(a.order_ + b.lowest_, b.order_ + a.lowest_);
    std::vector<Rational> c(order - lowest + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        long k = a.lowest_ + (long)i + b.lowest_ + (long)j;
        if (k > order) break;
        c[k - lowest] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(a.var_, lowest, std::move(c), order, exact);
  }

  friend LaurentSeries operator*(const Rational& r, const LaurentSeries& a) {
    LaurentSeries s = a;
    for (auto& c : s.coeffs_) c *= r;
    s.normalize();
    return s;
  }

  // Truncated division: denominator's lowest known coefficient must be
  // nonzero.  Result order follows the usual truncation bookkeeping.
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    check_vars(a, b);
    if (b.is_zero()) throw std::domain_error("laurent: division by zero series");
    long bv = b.lowest_;
    // available precision of the reciprocal of b (relative exponents)
    long prec_b = b.exact_ ? -1 : b.order_ - bv;  // -1 = unlimited
    long prec_a = a.exact_ ? -1 : a.order_ - a.valuation();
    long prec;
    if (prec_a < 0 && prec_b < 0)
      prec = std::max(a.order_ - a.valuation(), 2L * (b.order_ - bv)) + 4;
    else if (prec_a < 0)
      prec = prec_b;
    else if (prec_b < 0)
      prec = prec_a;
    else
      prec = std::min(prec_a, prec_b);
    long lowest = a.valuation() - bv;
    long order = lowest + prec;
    std::vector<Rational> q(prec + 1, Rational(0));
    // long division
    std::vector<Rational> rem(prec + 1, Rational(0));
    for (long i = 0; i <= prec; ++i) {
      long k = a.valuation() + i;
      rem[i] = (k <= a.order_ || a.exact_) ? a.coeff(k) : Rational(0);
    }
    Rational lead = b.coeff(bv);
    for (long i = 0; i <= prec; ++i) {
      Rational qi = rem[i] / lead;
      q[i] = qi;
      if (qi != 0)
        for (long j = 1; i + j <= prec; ++j) rem[i + j] -= qi * b.coeff(bv + j);
    }
    return LaurentSeries(a.var_, lowest, std::move(q), order, false);
  }

  bool operator==(const LaurentSeries& o) const {
    return var_ == o.var_ && lowest_ == o.lowest_ && order_ == o.order_ &&
           exact_ == o.exact_ && coeffs_ == o.coeffs_;
  }

  // substitute var -> c * var
  LaurentSeries scaled_var(const Rational& c) const {
    LaurentSeries s = *this;
    for (size_t i = 0; i < s.coeffs_.size(); ++i)
      s.coeffs_[i] *= rat_pow(c, s.lowest_ + (long)i);
    s.normalize();
    return s;
  }

  LaurentSeries derivative() const {
    LaurentSeries s = *this;
    if (s.coeffs_.empty()) {
      s.order_ -= 1;
      s.lowest_ -= 1;
      return s;
    }
    for (size_t i = 0; i < s.coeffs_.size(); ++i)
      s.coeffs_[i] *= Rational(s.lowest_ + (long)i);
    s.lowest_ -= 1;
    s.order_ -= 1;
    s.normalize();
    return s;
  }

  LaurentSeries with_var(const std::string& v) const {
    LaurentSeries s = *this;
    s.var_ = v;
    return s;
  }

 private:
  static void check_vars(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_)
      throw std::invalid_argument("laurent: mixed variable tags " + a.var_ + "," + b.var_);
  }

  void normalize() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
      lowest_ += (long)lead;
    }
    if (exact_) {
      while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
        --order_;
      }
    }
    if (coeffs_.empty()) lowest_ = order_ + 1;
  }

  std::string var_;
  long lowest_;
  std::vector<Rational> coeffs_;
  long order_;
  bool exact_;
};

// exp of a series with valuation >= 1, truncated at the argument's order
// (or at `order` if the argument is exact)
inline LaurentSeries series_exp(const LaurentSeries& a, long order = -1) {
  if (!a.is_zero() && a.valuation() < 1)
    throw std::domain_error("series_exp: argument needs valuation >= 1");
  long O = a.exact() ? order : a.order();
  if (O < 0) throw std::invalid_argument("series_exp: exact argument needs explicit order");
  LaurentSeries acc = LaurentSeries::constant(a.var(), 1).truncated(O);
  LaurentSeries term = acc;
  LaurentSeries x = a.truncated(O);
  for (long n = 1; n <= O; ++n) {
    term = Rational(1, (long)n) * (term * x);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc.truncated(O);
}

// log of a series with constant term 1
inline LaurentSeries series_log(const LaurentSeries& a, long order = -1) {
  if (a.coeff(0) != 1)
    throw std::domain_error("series_log: argument needs constant term 1");
  long O = a.exact() ? order : a.order();
  if (O < 0) throw std::invalid_argument("series_log: exact argument needs explicit order");
  LaurentSeries u = (a - LaurentSeries::constant(a.var(), 1)).truncated(O);
  LaurentSeries acc = LaurentSeries::zero(a.var(), O);
  LaurentSeries pw = LaurentSeries::constant(a.var(), 1).truncated(O);
  for (long n = 1; n <= O; ++n) {
    pw = pw * u;
    if (pw.is_zero()) break;
    acc = acc + Rational((n % 2) ? 1 : -1, (long)n) * pw;
  }
  return acc.truncated(O);
}

// exp(c*x) as a truncated series in x
inline LaurentSeries exp_series(const std::string& var, const Rational& c, long order) {
  std::vector<Rational> coeffs(order + 1);
  Rational term(1);
  coeffs[0] = term;
  for (long n = 1; n <= order; ++n) {
    term *= c;
    term /= (long)n;
    coeffs[n] = term;
  }
  return LaurentSeries(var, 0, std::move(coeffs), order, false);
}

}  // namespace knotasym
