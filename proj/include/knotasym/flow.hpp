#pragma once

// Irrational rotation numbers as continued fractions with on-demand
// refinement, and the sequence of closure times of the suspension-flow
// orbit.  No floating point anywhere: comparisons are decided on exact
// convergent enclosures, refined until they separate.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotasym/rational.hpp"

namespace knotasym {

struct UndecidableComparison : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RotationNumber {
 public:
  // terms [a0; a1, a2, ...]; the final term repeats forever, so the value
  // is a quadratic irrational (rational inputs are thereby excluded)
  explicit RotationNumber(std::vector<long> cf_terms);

  // "cf:0,2,2,2"
  static RotationNumber parse(const std::string& spec);

  // convergent numerator/denominator h_k / d_k, k = 0 is a0/1
  std::pair<Integer, Integer> convergent(int k) const;

  // exact interval containing the value, shrinking with depth
  std::pair<Rational, Rational> enclosure(int depth) const;

  Rational approx(int depth) const { return enclosure(depth).first; }

  const std::vector<long>& prefix() const { return terms_; }

 private:
  long term(int k) const {
    return k < (int)terms_.size() ? terms_[k] : terms_.back();
  }
  std::vector<long> terms_;
  mutable std::vector<std::pair<Integer, Integer>> conv_;  // cache
};

struct Closure {
  long t;  // closure time = meridian wraps p_k
  long q;  // parallel wraps
};

// First `count` closure times of the orbit of x0 under rotation by lambda:
// times m whose orbit point returns closer to x0 than every earlier point
// (circular distance; the closing arc may sit on either side of x0, which
// is also why the generic base point never influences the outcome), with
// q = number of parallel wraps including the closing arc.
std::vector<Closure> closure_times(const RotationNumber& lambda, const Rational& x0,
                                   int count, long max_steps = 4000000,
                                   int max_depth = 256);

// lambda/2 as an exact enclosure
std::pair<Rational, Rational> asymptotic_signature(const RotationNumber& lambda, int depth);

}  // namespace knotasym
