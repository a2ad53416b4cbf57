#pragma once

// Laurent polynomials in the two symbolic parameters p and q with rational
// coefficients.  These are the coefficient objects of symbolic diagram sums:
// term (a,b) -> c means c * p^a q^b.

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "knotasym/rational.hpp"

namespace knotasym {

class ParamPoly {
 public:
  using Key = std::pair<long, long>;  // (a, b) exponents of p, q

  ParamPoly() = default;
  explicit ParamPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  static ParamPoly monomial(const Rational& c, long a, long b) {
    ParamPoly r;
    if (c != 0) r.terms_[{a, b}] = c;
    return r;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("ParamPoly: not constant");
    return terms_.begin()->second;
  }

  Rational coeff(long a, long b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [k, v] : o.terms_) {
      auto it = terms_.find(k);
      if (it == terms_.end()) {
        terms_[k] = v;
      } else {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }

  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          Rational v = va * vb;
          if (v != 0) r.terms_[k] = v;
        } else {
          it->second += va * vb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  friend ParamPoly operator*(const Rational& c, const ParamPoly& a) {
    ParamPoly r;
    if (c == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
  }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  // substitute q := p (diagonal specialization); result lives in p only
  ParamPoly diagonal() const {
    ParamPoly r;
    for (const auto& [k, v] : terms_) {
      Key nk{k.first + k.second, 0};
      auto it = r.terms_.find(nk);
      if (it == r.terms_.end())
        r.terms_[nk] = v;
      else {
        it->second += v;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  // multiply by p^a q^b
  ParamPoly shifted(long a, long b) const {
    ParamPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{k.first + a, k.second + b}] = v;
    return r;
  }

  Rational evaluate(const Rational& p, const Rational& q) const {
    Rational acc(0);
    for (const auto& [k, v] : terms_) acc += v * rat_pow(p, k.first) * rat_pow(q, k.second);
    return acc;
  }

  // split by sign of the p-exponent (meaningful after diagonal())
  ParamPoly part_with(auto pred) const {
    ParamPoly r;
    for (const auto& [k, v] : terms_)
      if (pred(k.first, k.second)) r.terms_[k] = v;
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << rat_to_string(v);
      if (k.first) os << "*p^" << k.first;
      if (k.second) os << "*q^" << k.second;
    }
    return os.str();
  }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace knotasym
