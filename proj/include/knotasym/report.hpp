// Convergence sweeps over torus-knot families.  Every quantity is computed
// exactly per family member; the limit is estimated by the transparent
// two-point rule (solve f(p) = c + a/p from the last two members) and
// compared against labeled candidate constants.  The computed value is
// authoritative; candidates are only comparison columns.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "knotasym/flow.hpp"
#include "knotasym/gauss.hpp"
#include "knotasym/rational.hpp"

namespace knotasym {

struct FamilyMember {
  long p = 0, q = 0;
};

// (p, p+1) for p = 2..pmax (the lambda -> 1 family).
std::vector<FamilyMember> family_successor(long pmax);
// (p_k, q_k) from the flow's closure times.
std::vector<FamilyMember> family_closures(const RotationNumber& lambda, int count);

struct CandidateColumn {
  std::string label;
  Rational value;
  bool matches = false;
};

struct SweepRow {
  long h_degree = 0;  // 0 for scalar sweeps
  long p = 0, q = 0;
  Rational raw;     // exact value before scaling
  Rational scaled;  // raw / p^exponent
};

// Normalization convention recorded in every report: the flow time T is
// identified with the meridian count p, and degree-n quantities are scaled
// by p^{-2n}.
struct ConvergenceReport {
  std::string family;
  std::string normalization;
  long exponent = 0;
  std::vector<SweepRow> rows;
  Rational fitted_limit;
  std::vector<CandidateColumn> candidates;
};

// c such that f(x) = c + a/x passes through both points (p1 != p2).
Rational two_point_fit(const Rational& p1, const Rational& f1, const Rational& p2,
                       const Rational& f2);

// Recompute fitted_limit from the last two rows and mark each candidate:
// it matches iff it is strictly closest to the fit among all candidates and
// the relative gap is below 1% (absolute below 1% for a zero candidate).
void adjudicate(ConvergenceReport& r);

// <gamma, T(p,q)> / p^{2n} over the family.
ConvergenceReport sweep_pairing(const GaussDiagram& gamma, const std::vector<FamilyMember>& family,
                                std::vector<CandidateColumn> candidates, std::string name);

// Scalar invariants with closed forms.
ConvergenceReport sweep_writhe(const std::vector<FamilyMember>& family);
ConvergenceReport sweep_casson(const std::vector<FamilyMember>& family);

enum class PolyKind { alexander, jones };

// Coefficient of h^h_degree in P(e^{h/p^2}) over the family (the 1/p^2
// substitution is the scaling, so exponent = 0 and scaled = raw).
ConvergenceReport sweep_poly_coeff(PolyKind kind, long h_degree,
                                   const std::vector<FamilyMember>& family);

// One report per h-degree 0..max_h_degree, with the standard candidate
// columns attached (the closed-form limits under adjudication).
std::vector<ConvergenceReport> poly_limit_series(PolyKind kind, long max_h_degree,
                                                 const std::vector<FamilyMember>& family);

// Byte-stable emission.  CSV: one data row per family member, then one row
// per candidate with p = "fit".
std::string report_csv(const ConvergenceReport& r);
nlohmann::json report_json(const ConvergenceReport& r);
ConvergenceReport report_from_json(const nlohmann::json& j);

}  // namespace knotasym
