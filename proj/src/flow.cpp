#include "knotasym/flow.hpp"

#include <sstream>

namespace knotasym {

RotationNumber::RotationNumber(std::vector<long> cf_terms) : terms_(std::move(cf_terms)) {
  if (terms_.empty()) throw std::invalid_argument("rotation number: empty continued fraction");
  if (terms_[0] < 0) throw std::invalid_argument("rotation number: a0 >= 0");
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i] < 1) throw std::invalid_argument("rotation number: partial quotients >= 1");
  if (terms_.back() < 1) throw std::invalid_argument("rotation number: repeating term >= 1");
}

RotationNumber RotationNumber::parse(const std::string& spec) {
  std::string body = spec;
  if (body.rfind("cf:", 0) == 0) body = body.substr(3);
  std::vector<long> terms;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    terms.push_back(std::stol(tok));
  }
  return RotationNumber(terms);
}

std::pair<Integer, Integer> RotationNumber::convergent(int k) const {
  if (k < 0) throw std::invalid_argument("convergent index");
  while ((int)conv_.size() <= k) {
    int i = (int)conv_.size();
    Integer a(term(i));
    if (i == 0)
      conv_.push_back({a, Integer(1)});
    else if (i == 1)
      conv_.push_back({a * conv_[0].first + 1, a});
    else
      conv_.push_back({a * conv_[i - 1].first + conv_[i - 2].first,
                       a * conv_[i - 1].second + conv_[i - 2].second});
  }
  return conv_[k];
}

std::pair<Rational, Rational> RotationNumber::enclosure(int depth) const {
  if (depth < 1) depth = 1;
  auto [n1, d1] = convergent(depth);
  auto [n0, d0] = convergent(depth - 1);
  Rational a(n0, d0), b(n1, d1);
  a.canonicalize();
  b.canonicalize();
  if (a < b) return {a, b};
  return {b, a};
}

namespace {

// sign of m*lambda - r, refined until decided
int sign_of(const RotationNumber& lam, long m, const Integer& r, int& depth, int max_depth) {
  for (;;) {
    auto [lo, hi] = lam.enclosure(depth);
    Rational a = m * lo - Rational(r), b = m * hi - Rational(r);
    if (a > 0) return 1;
    if (b < 0) return -1;
    if (depth >= max_depth)
      throw UndecidableComparison("rotation comparison undecided at max refinement depth");
    ++depth;
  }
}

}  // namespace

std::vector<Closure> closure_times(const RotationNumber& lambda, const Rational& x0,
                                   int count, long max_steps, int max_depth) {
  if (!(x0 > 0 && x0 < 1)) throw std::invalid_argument("base point must lie in (0,1)");
  std::vector<Closure> out;
  int depth = 4;
  // current record |b*lambda - rb|, empty until m = 1 seeds it
  long best_m = 0;
  Integer best_r = 0;
  for (long m = 1; m <= max_steps && (int)out.size() < count; ++m) {
    // nearest integer r to m*lambda
    Integer r;
    for (;;) {
      auto [lo, hi] = lambda.enclosure(depth);
      Rational a = m * lo + rat(1, 2), b = m * hi + rat(1, 2);
      Integer fa, fb;
      mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
      mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
      if (fa == fb) {
        r = fa;
        break;
      }
      if (depth >= max_depth)
        throw UndecidableComparison("nearest integer undecided at max refinement depth");
      ++depth;
    }
    bool record;
    if (best_m == 0) {
      record = true;
    } else {
      // |m L - r| < |best_m L - best_r| ?  Resolve the two absolute values
      // by their (irrational, hence nonzero) signs, then compare a single
      // linear form in lambda against zero.
      int sm = sign_of(lambda, m, r, depth, max_depth);
      int sb = sign_of(lambda, best_m, best_r, depth, max_depth);
      // want sign of sm*(mL - r) - sb*(bL - rb) = (sm*m - sb*b) L - (sm*r - sb*rb)
      long mm = sm * m - sb * best_m;
      Integer rr = sm * r - sb * best_r;
      int s;
      if (mm == 0)
        s = rr < 0 ? 1 : -1;  // difference = -rr
      else
        s = sign_of(lambda, mm, rr, depth, max_depth);
      record = s < 0;
    }
    if (record) {
      best_m = m;
      best_r = r;
      if (r < 0 || !r.fits_slong_p())
        throw std::overflow_error("parallel wrap count out of range");
      out.push_back({m, r.get_si()});
    }
  }
  if ((int)out.size() < count)
    throw std::runtime_error("closure search exhausted max_steps");
  return out;
}

std::pair<Rational, Rational> asymptotic_signature(const RotationNumber& lambda, int depth) {
  auto [lo, hi] = lambda.enclosure(depth);
  return {lo / 2, hi / 2};
}

}  // namespace knotasym
