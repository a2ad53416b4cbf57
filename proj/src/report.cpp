#include "knotasym/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "knotasym/torus.hpp"

namespace knotasym {

namespace {

Rational pow_rat(const Rational& base, long e) {
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// The family's rotation number as the two-point fit of q/p, exact for the
// q = p+1 family and a convergent-quality estimate for closure families.
Rational fitted_lambda(const std::vector<FamilyMember>& family) {
  if (family.size() < 2) return rat(family.back().q, family.back().p);
  const FamilyMember& a = family[family.size() - 2];
  const FamilyMember& b = family.back();
  return two_point_fit(a.p, rat(a.q, a.p), b.p, rat(b.q, b.p));
}

long double_factorial_odd(long n) {  // (2n-1)!! with (-1)!! = 1
  long out = 1;
  for (long k = 2 * n - 1; k >= 1; k -= 2) out *= k;
  return out;
}

}  // namespace

std::vector<FamilyMember> family_successor(long pmax) {
  std::vector<FamilyMember> out;
  for (long p = 2; p <= pmax; ++p) out.push_back({p, p + 1});
  return out;
}

std::vector<FamilyMember> family_closures(const RotationNumber& lambda, int count) {
  std::vector<FamilyMember> out;
  for (const Closure& c : closure_times(lambda, rat(1, 7), count))
    if (c.t >= 2 && c.q >= 2) out.push_back({c.t, c.q});
  return out;
}

Rational two_point_fit(const Rational& p1, const Rational& f1, const Rational& p2,
                       const Rational& f2) {
  if (p1 == p2) throw std::invalid_argument("two_point_fit: equal abscissae");
  return (p2 * f2 - p1 * f1) / (p2 - p1);
}

void adjudicate(ConvergenceReport& r) {
  if (r.rows.size() >= 2) {
    const SweepRow& a = r.rows[r.rows.size() - 2];
    const SweepRow& b = r.rows.back();
    r.fitted_limit = two_point_fit(a.p, a.scaled, b.p, b.scaled);
  } else if (r.rows.size() == 1) {
    r.fitted_limit = r.rows[0].scaled;
  } else {
    r.fitted_limit = 0;
  }
  for (auto& c : r.candidates) c.matches = false;
  if (r.rows.empty()) return;
  for (size_t i = 0; i < r.candidates.size(); ++i) {
    const Rational gap = abs_rat(r.fitted_limit - r.candidates[i].value);
    bool closest = true;
    for (size_t j = 0; j < r.candidates.size(); ++j)
      if (j != i && r.candidates[j].value != r.candidates[i].value &&
          abs_rat(r.fitted_limit - r.candidates[j].value) <= gap)
        closest = false;
    const Rational tol = r.candidates[i].value == 0
                             ? rat(1, 100)
                             : Rational(abs_rat(r.candidates[i].value) / 100);
    r.candidates[i].matches = closest && gap < tol;
  }
}

ConvergenceReport sweep_pairing(const GaussDiagram& gamma, const std::vector<FamilyMember>& family,
                                std::vector<CandidateColumn> candidates, std::string name) {
  ConvergenceReport r;
  const long n = gamma.n();
  if (n > 3) throw std::invalid_argument("pairing sweep limited to patterns with at most 3 arrows");
  long pmax = 0;
  for (const FamilyMember& m : family) pmax = std::max(pmax, m.p);
  const long budget = n <= 1 ? 1000 : (n == 2 ? 60 : 25);
  if (pmax > budget)
    throw std::invalid_argument("pairing sweep budget exceeded: pmax " + std::to_string(pmax) +
                                " > " + std::to_string(budget) + " for n = " + std::to_string(n));
  r.family = std::move(name);
  r.exponent = 2 * n;
  r.normalization = "flow time T identified with the meridian count p; pairing with a degree-" +
                    std::to_string(n) + " arrow diagram, scaled by p^-" + std::to_string(2 * n);
  r.candidates = std::move(candidates);
  if (r.candidates.empty() && n >= 1 && !family.empty()) {
    // the two competing closed-form constants at sigma = lambda/2
    const Rational sigma = Rational(fitted_lambda(family) / 2);
    r.candidates = {{"sigma^n/(2n-1)!!",
                     Rational(pow_rat(sigma, n) / Rational(double_factorial_odd(n))), false},
                    {"2^n sigma^n/(2n)!",
                     Rational(pow_rat(Rational(2) * sigma, n) /
                              Rational(factorial((unsigned long)(2 * n)))),
                     false}};
  }
  for (const FamilyMember& m : family) {
    SweepRow row;
    row.p = m.p;
    row.q = m.q;
    row.raw = Rational(pairing(gamma, torus_knot_diagram(m.p, m.q)));
    row.scaled = row.raw / pow_rat(Rational(m.p), 2 * n);
    r.rows.push_back(row);
  }
  adjudicate(r);
  return r;
}

ConvergenceReport sweep_writhe(const std::vector<FamilyMember>& family) {
  ConvergenceReport r;
  r.family = "writhe";
  r.exponent = 2;
  r.normalization = "writhe q(p-1) of the (p,q) torus braid closure, scaled by p^-2";
  r.candidates = {{"lim q/p = 1", 1, false}, {"lim q/(2p) = 1/2", rat(1, 2), false}};
  for (const FamilyMember& m : family) {
    SweepRow row;
    row.p = m.p;
    row.q = m.q;
    row.raw = Rational(m.q * (m.p - 1));
    row.scaled = row.raw / Rational(m.p * m.p);
    r.rows.push_back(row);
  }
  adjudicate(r);
  return r;
}

ConvergenceReport sweep_casson(const std::vector<FamilyMember>& family) {
  ConvergenceReport r;
  r.family = "casson";
  r.exponent = 4;
  r.normalization =
      "degree-2 invariant from the symmetrized Alexander polynomial, scaled by p^-4; "
      "candidates use sigma = lim q/(2p) = 1/2";
  r.candidates = {{"sigma^2/6", rat(1, 24), false}, {"sigma^2/3", rat(1, 12), false}};
  for (const FamilyMember& m : family) {
    SweepRow row;
    row.p = m.p;
    row.q = m.q;
    row.raw = v2_from_alexander(m.p, m.q);
    row.scaled = row.raw / pow_rat(Rational(m.p), 4);
    r.rows.push_back(row);
  }
  adjudicate(r);
  return r;
}

ConvergenceReport sweep_poly_coeff(PolyKind kind, long h_degree,
                                   const std::vector<FamilyMember>& family) {
  ConvergenceReport r;
  const bool jones = kind == PolyKind::jones;
  r.family = jones ? "jones" : "alexander";
  r.exponent = 0;
  r.normalization = "coefficient of h^" + std::to_string(h_degree) +
                    " after substituting t = exp(h/p^2); already scale-free";
  for (const FamilyMember& m : family) {
    const LaurentSeries poly = jones ? jones_torus(m.p, m.q) : alexander_torus(m.p, m.q);
    const LaurentSeries s = normalized_series(poly, rat(1, m.p * m.p), h_degree + 1);
    SweepRow row;
    row.h_degree = h_degree;
    row.p = m.p;
    row.q = m.q;
    row.raw = s.coeff(h_degree);
    row.scaled = row.raw;
    r.rows.push_back(row);
  }
  adjudicate(r);
  return r;
}

std::vector<ConvergenceReport> poly_limit_series(PolyKind kind, long max_h_degree,
                                                 const std::vector<FamilyMember>& family) {
  const Rational sigma = rat(1, 2);  // lim q/(2p) for the q = p+1 family
  std::vector<ConvergenceReport> out;
  for (long k = 0; k <= max_h_degree; ++k) {
    ConvergenceReport r = sweep_poly_coeff(kind, k, family);
    if (kind == PolyKind::alexander) {
      // sinh(sigma h)/(sigma h): sigma^(2j)/(2j+1)! at even degrees, 0 at odd.
      const Rational c =
          k % 2 == 0 ? Rational(pow_rat(sigma, k) / Rational(factorial((unsigned long)(k + 1))))
                     : Rational(0);
      r.candidates = {{"sinh(sigma*h)/(sigma*h)", c, false}};
    } else {
      const Rational a =
          pow_rat(sigma, k) * rat(1 - k, 1) / Rational(factorial((unsigned long)k));
      const Rational b = k == 0 ? Rational(0)
                                : Rational(-pow_rat(sigma, k) /
                                           Rational(factorial((unsigned long)(k - 1))));
      r.candidates = {{"(1-sigma*h)*exp(sigma*h)", a, false},
                      {"-sigma*h*exp(sigma*h)", b, false}};
    }
    adjudicate(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "h_degree,p,q,coefficient,fitted_limit,paper_claim,abs_gap\n";
  for (const SweepRow& row : r.rows)
    os << row.h_degree << ',' << row.p << ',' << row.q << ',' << rat_to_string(row.scaled)
       << ",,,\n";
  if (r.rows.empty()) return os.str();
  const long hd = r.rows.back().h_degree;
  for (const CandidateColumn& c : r.candidates)
    os << hd << ",fit," << c.label << ",," << rat_to_string(r.fitted_limit) << ','
       << rat_to_string(c.value) << ',' << rat_to_decimal(abs_rat(r.fitted_limit - c.value), 12)
       << '\n';
  return os.str();
}

nlohmann::json report_json(const ConvergenceReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& row : r.rows)
    rows.push_back({{"h_degree", row.h_degree},
                    {"p", row.p},
                    {"q", row.q},
                    {"raw", rat_to_string(row.raw)},
                    {"scaled", rat_to_string(row.scaled)},
                    {"scaled_decimal", rat_to_decimal(row.scaled, 12)}});
  nlohmann::json cands = nlohmann::json::array();
  for (const CandidateColumn& c : r.candidates)
    cands.push_back({{"label", c.label},
                     {"value", rat_to_string(c.value)},
                     {"value_decimal", rat_to_decimal(c.value, 12)},
                     {"matches", c.matches}});
  return {{"family", r.family},
          {"normalization", r.normalization},
          {"exponent", r.exponent},
          {"rows", rows},
          {"fitted_limit", rat_to_string(r.fitted_limit)},
          {"fitted_limit_decimal", rat_to_decimal(r.fitted_limit, 12)},
          {"candidates", cands}};
}

ConvergenceReport report_from_json(const nlohmann::json& j) {
  ConvergenceReport r;
  r.family = j.at("family").get<std::string>();
  r.normalization = j.at("normalization").get<std::string>();
  r.exponent = j.at("exponent").get<long>();
  for (const auto& row : j.at("rows")) {
    SweepRow s;
    s.h_degree = row.at("h_degree").get<long>();
    s.p = row.at("p").get<long>();
    s.q = row.at("q").get<long>();
    s.raw = rat_from_string(row.at("raw").get<std::string>());
    s.scaled = rat_from_string(row.at("scaled").get<std::string>());
    r.rows.push_back(s);
  }
  r.fitted_limit = rat_from_string(j.at("fitted_limit").get<std::string>());
  for (const auto& c : j.at("candidates"))
    r.candidates.push_back({c.at("label").get<std::string>(),
                            rat_from_string(c.at("value").get<std::string>()),
                            c.at("matches").get<bool>()});
  return r;
}

}  // namespace knotasym
