#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "knotasym/flow.hpp"

using namespace knotasym;

namespace {

std::set<long> convergent_denominators(const RotationNumber& lam, int upto) {
  std::set<long> dens;
  for (int k = 0; k <= upto; ++k) {
    auto [n, d] = lam.convergent(k);
    if (d.fits_slong_p()) dens.insert(d.get_si());
  }
  return dens;
}

}  // namespace

TEST_CASE("convergents of sqrt(2)-1") {
  RotationNumber lam = RotationNumber::parse("cf:0,2,2,2,2");
  auto [n, d] = lam.convergent(3);
  CHECK(n == 5);
  CHECK(d == 12);
  auto [lo, hi] = lam.enclosure(8);
  CHECK(lo < hi);
  // sqrt(2)-1 = 0.41421356...
  CHECK(lo > rat(41421, 100000));
  CHECK(hi < rat(41422, 100000));
}

TEST_CASE("closure times are convergent denominators (sqrt(2)-1)") {
  RotationNumber lam({0, 2});
  auto cls = closure_times(lam, rat(1, 7), 8);
  REQUIRE(cls.size() == 8);
  std::vector<long> ts, qs;
  for (auto& c : cls) {
    ts.push_back(c.t);
    qs.push_back(c.q);
  }
  CHECK(ts == std::vector<long>{1, 2, 5, 12, 29, 70, 169, 408});
  CHECK(qs == std::vector<long>{0, 1, 2, 5, 12, 29, 70, 169});
  auto dens = convergent_denominators(lam, 12);
  for (long t : ts) CHECK(dens.count(t));
}

TEST_CASE("closure times are Fibonacci for the golden rotation") {
  RotationNumber lam({0, 1});
  auto cls = closure_times(lam, rat(1, 7), 8);
  std::vector<long> ts;
  for (auto& c : cls) ts.push_back(c.t);
  CHECK(ts == std::vector<long>{1, 2, 3, 5, 8, 13, 21, 34});
  // q_k are the Fibonacci numerators
  CHECK(cls[7].q == 21);
}

TEST_CASE("closure pairs are coprime and approximate lambda well") {
  for (auto spec : {"cf:0,2", "cf:0,1", "cf:0,3,1,2", "cf:0,1,2"}) {
    RotationNumber lam = RotationNumber::parse(spec);
    auto [lo, hi] = lam.enclosure(40);
    for (auto& c : closure_times(lam, rat(1, 7), 8)) {
      CHECK(std::gcd(c.t, c.q) == 1);
      // |q/p - lambda| < 1/p^2 via the enclosure
      Rational gap_lo = rat_abs(rat(c.q, c.t) - lo), gap_hi = rat_abs(rat(c.q, c.t) - hi);
      Rational gap = gap_lo > gap_hi ? gap_lo : gap_hi;
      CHECK(gap < rat(1, c.t * c.t));
    }
  }
}

TEST_CASE("closure times land on convergent denominators for random rotations") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<long> d(1, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<long> terms{0};
    for (int i = 0; i < 6; ++i) terms.push_back(d(rng));
    RotationNumber lam(terms);
    auto dens = convergent_denominators(lam, 24);
    for (auto& c : closure_times(lam, rat(1, 7), 10)) CHECK(dens.count(c.t));
  }
}

TEST_CASE("base point and parameter validation") {
  RotationNumber lam({0, 2});
  CHECK_THROWS(closure_times(lam, rat(0), 3));
  CHECK_THROWS(closure_times(lam, rat(3, 2), 3));
  CHECK_THROWS(RotationNumber({0, 0}));
  CHECK_THROWS(RotationNumber(std::vector<long>{}));
}

TEST_CASE("asymptotic signature is lambda/2") {
  RotationNumber lam({0, 1});
  auto [lo, hi] = asymptotic_signature(lam, 30);
  // (sqrt(5)-1)/4 = 0.30901699...
  CHECK(lo > rat(30901, 100000));
  CHECK(hi < rat(30902, 100000));
}
