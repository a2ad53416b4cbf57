// Acceptance gate: twelve end-to-end checks tying the exact-arithmetic
// modules together.  Each prints a single PASS/FAIL line; a FAIL here is a
// real, reproduced discrepancy, never silenced.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <numeric>
#include <set>
#include <string>

#include "knotasym/flow.hpp"
#include "knotasym/gauss.hpp"
#include "knotasym/glue_graph.hpp"
#include "knotasym/jacobi_ops.hpp"
#include "knotasym/jacobi_quotient.hpp"
#include "knotasym/report.hpp"
#include "knotasym/special_series.hpp"
#include "knotasym/torus.hpp"

using namespace knotasym;

namespace {

void verdict(int n, const std::string& what, bool ok) {
  std::printf("criterion %2d [%s] %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion " << n << ": " << what);
}

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::vector<std::pair<long, long>> coprime_pairs_up_to(long bound) {
  std::vector<std::pair<long, long>> out;
  for (long p = 2; p * (p + 1) <= bound; ++p)
    for (long q = p + 1; p * q <= bound; ++q)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

const QuotientBasis& quotient3() {
  static QuotientBasis q = build_quotient(3);
  return q;
}

}  // namespace

TEST_CASE("1: cross-oracle degree-2 identity") {
  bool ok = true;
  for (auto [p, q] : coprime_pairs_up_to(60))
    ok = ok && (casson(torus_knot_diagram(p, q)) == v2_from_alexander(p, q));
  verdict(1, "casson pairing equals the Alexander h^2 coefficient on all coprime pq <= 60", ok);
}

TEST_CASE("2: writhe decomposition") {
  bool ok = true;
  for (auto [p, q] : coprime_pairs_up_to(60)) {
    GaussDiagram g = torus_knot_diagram(p, q);
    ok = ok && (pairing(kArrowForward, g) + pairing(kArrowBackward, g) == Integer(g.writhe()));
  }
  verdict(2, "the two pointed one-arrow pairings sum to the writhe on all coprime pq <= 60", ok);
}

TEST_CASE("3: Alexander coefficient asymptotics at p = 100") {
  auto fam = family_successor(100);
  auto r2 = sweep_poly_coeff(PolyKind::alexander, 2, fam);
  auto r4 = sweep_poly_coeff(PolyKind::alexander, 4, fam);
  const Rational c2 = r2.rows.back().scaled, c4 = r4.rows.back().scaled;
  const Rational gap2 = abs_rat(c2 - rat(1, 24)) * 24;     // relative
  const Rational gap4 = abs_rat(c4 - rat(1, 1920)) * 1920;
  const bool raw2_ok = gap2 < rat(1, 100);
  const bool raw4_ok = gap4 < rat(1, 100);
  const Rational fit_gap = abs_rat(r2.fitted_limit - rat(1, 24)) * 24;
  const bool fit_ok = fit_gap < rat(1, 1000);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "h^2/h^4 coefficients at p=100 within 1%% of 1/24 and 1/1920 "
                "(actual gaps %.4f%% and %.4f%%), two-point fit within 0.1%% (gap %.4f%%)",
                gap2.get_d() * 100, gap4.get_d() * 100, fit_gap.get_d() * 100);
  // The raw-coefficient clauses fail honestly: at p = 100 (q = 101) the h^2
  // coefficient is (1 - p^-2)(q^2 - 1)/(24 p^2) = 1.019898.../24, i.e.
  // 1.99% above 1/24, because the q = p+1 family approaches sigma = 1/2
  // only at rate 1/p; the fitted limit removes the 1/p term and lands
  // within 0.1%.  No parameter choice consistent with the stated family
  // meets the 1% raw threshold at p = 100.
  verdict(3, buf, raw2_ok && raw4_ok && fit_ok);
  CHECK(fit_ok);  // the recoverable clause, asserted separately
}

TEST_CASE("4: Jones coefficient asymptotics") {
  bool const_ok = true;
  for (long p = 2; p <= 40; ++p) {
    LaurentSeries j = normalized_series(jones_torus(p, p + 1), rat(1, p * p), 1);
    const_ok = const_ok && (j.coeff(0) == 1);
  }
  auto reports = poly_limit_series(PolyKind::jones, 4, family_successor(30));
  bool series_ok = true;
  for (const auto& r : reports)
    series_ok = series_ok && r.candidates[0].matches && !r.candidates[1].matches;
  // cross-family consistency after (2 sigma)^deg rescaling
  auto fib = family_closures(RotationNumber::parse("cf:1,1,1,1"), 12);
  auto rf = sweep_poly_coeff(PolyKind::jones, 2, fib);
  Rational lambda = two_point_fit(fib[fib.size() - 2].p,
                                  rat(fib[fib.size() - 2].q, fib[fib.size() - 2].p),
                                  fib.back().p, rat(fib.back().q, fib.back().p));
  Rational alpha_fib = rf.fitted_limit / (lambda * lambda);
  Rational alpha_succ = reports[2].fitted_limit;  // (2 sigma) = 1 there
  bool cross_ok = abs_rat(alpha_fib - alpha_succ) < abs_rat(alpha_succ) / 100;
  verdict(4,
          "J(e^{h/p^2}) constant term is exactly 1 for p <= 40; fitted series to h^4 matches "
          "(1-sigma h)e^{sigma h} per coefficient and not -sigma h e^{sigma h}; h^2 limit "
          "consistent across lambda families after (2 sigma)^deg rescaling",
          const_ok && series_ok && cross_ok);
}

TEST_CASE("5: degree-2 pairing constant adjudication") {
  auto fam = family_successor(60);
  auto r = sweep_pairing(kCassonDiagram, fam, {}, "casson-pairing");
  // independent closed-form limit of v2/p^4
  auto closed = sweep_casson(fam);
  int n_matching = 0;
  for (const auto& c : r.candidates) n_matching += c.matches;
  bool ok = n_matching == 1 && r.candidates[1].matches &&  // 2^n sigma^n/(2n)! = 1/24
            r.candidates[1].value == rat(1, 24) && closed.candidates[0].matches &&
            closed.candidates[0].value == rat(1, 24);
  verdict(5,
          "Casson-pattern sweep to pmax = 60 fits exactly one of {1/12, 1/24}, namely 1/24, "
          "agreeing with the independent closed-form limit of v2/p^4",
          ok);
}

TEST_CASE("6: template closure times are convergent denominators") {
  bool ok = true;
  for (const std::string& spec : {"cf:0,2,2,2", "cf:1,1,1,1"}) {
    RotationNumber rot = RotationNumber::parse(spec);
    std::set<Integer> denoms;
    for (int k = 0; k < 40; ++k) denoms.insert(rot.convergent(k).second);
    auto enc = rot.enclosure(80);
    auto closures = closure_times(rot, rat(1, 7), 8);
    ok = ok && closures.size() == 8;
    for (const Closure& c : closures) {
      ok = ok && denoms.count(Integer(c.t)) == 1;
      ok = ok && std::gcd(c.t, c.q) == 1;
      const Rational ratio = rat(c.q, c.t), bound = rat(1, c.t * c.t);
      ok = ok && abs_rat(ratio - enc.first) < bound && abs_rat(ratio - enc.second) < bound;
    }
  }
  verdict(6,
          "first 8 closure times for both rotation numbers are convergent denominators, "
          "coprime to the parallel count, with |q/t - lambda| < 1/t^2",
          ok);
}

TEST_CASE("7: quotient sanity at degree 3") {
  const QuotientBasis& qa = quotient3();
  QuotientBasis qb = build_quotient(3, 20240817);
  bool rel_ok = true;
  for (const Relation& r : qa.relations) rel_ok = rel_ok && qa.project_relation(r).empty();
  for (const Relation& r : qb.relations) rel_ok = rel_ok && qb.project_relation(r).empty();
  bool wheels_ok = canonicalize(RawDiagram::wheel(1)).sign == 0 &&
                   canonicalize(RawDiagram::wheel(3)).sign == 0;
  bool dims_ok = qa.dim_by_degree == qb.dim_by_degree && qa.basis == qb.basis;
  std::string dims;
  for (auto [deg, dim] : qa.dim_by_degree)
    dims += (dims.empty() ? "" : ", ") + std::to_string(deg) + ":" + std::to_string(dim);
  verdict(7,
          "every AS/IHX relation projects to zero, odd wheels vanish, dimensions {" + dims +
              "} stable across enumeration orders",
          rel_ok && wheels_ok && dims_ok);
}

TEST_CASE("8: degree-1 structure of the torus expansion") {
  DiagramSum z = z_torus(1);
  bool ok = z.coefficient(RawDiagram::strut()) == ParamPoly() &&
            z.coefficient(RawDiagram::theta()) == ParamPoly::monomial(rat(1, 48), 1, 1);
  verdict(8, "strut coefficient is identically 0 and theta coefficient is pq/48, symbolically",
          ok);
}

TEST_CASE("9: degree-scaled diagonal limit matches the closed-form limit") {
  bool ok = true;
  for (long d : {2L, 3L}) {
    DiagramSum z = z_torus(d);
    ScaledDiagonal s = scaled_diagonal_limit(z);
    ok = ok && s.positive.empty();
    const QuotientBasis& q = quotient3();
    ok = ok && q.project(s.constant) == q.project(asymptotic_limit(d));
  }
  verdict(9,
          "p^{-2 deg} diagonal of the torus expansion has no positive powers of p and its "
          "constant part equals the q = p limit series in the quotient, at degrees 2 and 3",
          ok);
}

TEST_CASE("10: pure-wheel part matches the wheeled Alexander series") {
  const long D = 3;
  CanonicalDiagram empty_code = canonicalize(RawDiagram::empty()).diagram;
  CanonicalDiagram w2 = canonicalize(RawDiagram::wheel(2)).diagram;
  auto pure_wheel = [&](const CanonicalDiagram& d) { return d == empty_code || d == w2; };
  DiagramSum lhs = z_torus(D).evaluate(2, 3).filter(pure_wheel);
  LaurentSeries delta = normalized_series(alexander_torus(2, 3), 1, 2 * D + 2);
  LaurentSeries g = wheel_series_F(2 * D + 2) - rat(1, 2) * series_log(delta);
  DiagramSum rhs = sum_exp(wheel_sum(g, D));
  bool ok = lhs == rhs && lhs.coefficient(RawDiagram::wheel(2)) == ParamPoly(rat(-23, 48));
  verdict(10,
          "pure-wheel part of the (2,3) expansion equals exp(wh(F - log(Alexander)/2)); "
          "2-wheel coefficient -23/48",
          ok);
}

TEST_CASE("11: gluing-graph expansion of the omega product") {
  EqSubReport r2 = verify_eq_sub(2, quotient3());
  EqSubReport r3 = verify_eq_sub(3, quotient3());
  verdict(11, "graph-sum identity for the glued omega product holds exactly at degrees 2 and 3",
          r2.equal && r3.equal);
}

TEST_CASE("12: tree machinery") {
  GraphConstraints c;
  c.max_edges = 1;
  c.min_edges = 1;
  auto classes = enumerate_graphs(c);
  std::multiset<long> auts;
  for (const auto& gc : classes) auts.insert(gc.aut);
  bool enum_ok = classes.size() == 4 && auts == std::multiset<long>{1, 1, 1, 2};

  GraphConstraints ct;
  ct.max_edges = 2;
  ct.min_edges = 1;
  ct.trees_only = true;
  auto trees = enumerate_graphs(ct);
  auto wcs = scaled_wheel_coeffs(0, 0, +1, 8);
  std::map<char, WheelCoeffs> f{{'x', wcs}, {'y', wcs}, {'z', wcs}};
  LaurentSeries F = wheel_series_F(10, "y");
  bool glue_ok = trees.size() == 16;
  for (const auto& cls : trees) {
    DiagramSum brute = sub_bruteforce(cls.graph, f, 3);
    std::vector<LaurentCoeffs> pv;
    for (const auto& dec : sub_tree_closed(cls.graph, {{'x', F}, {'y', F}, {'z', F}}))
      pv.push_back(scale_decoration(dec.series, dec.k, 0, 0, +1));
    ReglueResult rr = tree_reglue(cls.graph, pv, 3);
    glue_ok = glue_ok && rr.singular.empty() &&
              quotient3().project(brute) == quotient3().project(rr.sum);
  }

  bool pole_ok = true;
  for (int n = 1; n <= 6; ++n) {
    LaurentSeries s = f_plus_deriv(n, 6);
    Rational pole = Rational(factorial((unsigned long)(n - 1))) / 2;
    if (n % 2 == 0) pole = -pole;  // (-1)^{n-1}
    pole_ok = pole_ok && s.coeff(-n) == pole;
    for (long j = -n + 1; j < 0; ++j) pole_ok = pole_ok && s.coeff(j) == 0;
  }
  verdict(12,
          "4 one-edge graph classes with |aut| {1,1,1,2}; closed tree formula matches brute "
          "force on all <= 2-edge trees in the degree-3 quotient; derivative poles are exactly "
          "(-1)^{n-1}(n-1)!/(2h^n) for n <= 6",
          enum_ok && glue_ok && pole_ok);
}
