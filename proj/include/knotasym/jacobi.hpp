// Uni-trivalent Jacobi diagrams with no skeleton, modulo AS, over exact
// rationals.  A diagram is a graph whose vertices are trivalent (with a cyclic
// order on the incident half-edges) or univalent ("legs"); an edge both of
// whose endpoints are univalent is a "strut".  AS is implemented structurally:
// canonical forms carry a sign, and a diagram admitting an orientation-odd
// automorphism canonicalizes to sign 0, i.e. is identically zero (this kills
// w_1, all odd wheels, and any diagram with a looped edge at a trivalent
// vertex).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knotasym/laurent.hpp"
#include "knotasym/param_poly.hpp"
#include "knotasym/rational.hpp"

namespace knotasym {

// Raw (labelled) diagram.  Trivalent vertex v owns half-edges 3v, 3v+1, 3v+2,
// in cyclic order.  partner[h] is the half-edge glued to h, or kLeg if h ends
// in a univalent vertex.  Struts are stored only as a count: a strut carries
// no structure beyond its two legs.  Legs are unordered (this is the algebra
// B of open diagrams, symmetrized legs).
inline constexpr int kLeg = -1;

struct RawDiagram {
  int n_tri = 0;
  std::vector<int> partner;  // size 3*n_tri
  int n_struts = 0;

  int n_legs() const {
    int c = 0;
    for (int p : partner)
      if (p == kLeg) ++c;
    return c;
  }
  // (#trivalent + #univalent)/2; every diagram has even total vertex count.
  long degree() const { return (n_tri + n_legs()) / 2 + n_struts; }
  void validate() const;

  static RawDiagram empty() { return {}; }
  static RawDiagram strut() { return {0, {}, 1}; }
  // n-cycle of trivalent vertices, one leg each (n >= 1; w_1 has a loop).
  static RawDiagram wheel(int n);
  // theta: two trivalent vertices joined by three edges.
  static RawDiagram theta();
  static RawDiagram disjoint_union(const RawDiagram& a, const RawDiagram& b);
};

// Canonical form: flat integer code, unique per isomorphism class.
// Layout: [n_struts, n_comps, then per component: n_vertices, 3*n rows].
// Row entries: 1 = leg, 0 = partner not yet placed (forward reference),
// 4 + k = partner is the k-th placed half-edge of this component.
struct CanonicalDiagram {
  std::vector<int> code;
  int n_tri = 0;
  int n_legs = 0;
  int n_struts = 0;

  long degree() const { return (n_tri + n_legs) / 2 + n_struts; }
  bool operator==(const CanonicalDiagram& o) const { return code == o.code; }
  bool operator<(const CanonicalDiagram& o) const {
    long da = degree(), db = o.degree();
    if (da != db) return da < db;
    return code < o.code;
  }
  // True iff every component is a wheel and there are no struts.
  bool is_wheel_product() const;
  // Wheel sizes if is_wheel_product(), ascending.
  std::vector<int> wheel_sizes() const;
  std::string to_string() const;
};

// Canonical form plus the sign relating the input labelling to the canonical
// representative.  sign == 0 means the diagram is zero modulo AS.
struct Canonicalized {
  CanonicalDiagram diagram;
  int sign = 0;
};

Canonicalized canonicalize(const RawDiagram& d);
RawDiagram decode(const CanonicalDiagram& d);

// A finite rational[p,q]-linear combination of canonical diagrams, truncated
// in degree.  Operations drop any term above max_degree.
class DiagramSum {
 public:
  explicit DiagramSum(long max_degree) : max_degree_(max_degree) {}

  long max_degree() const { return max_degree_; }
  const std::map<CanonicalDiagram, ParamPoly>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const RawDiagram& d, const ParamPoly& coeff);
  void add_canonical(const CanonicalDiagram& d, const ParamPoly& coeff);

  DiagramSum truncated(long max_degree) const;
  ParamPoly coefficient(const CanonicalDiagram& d) const;
  // Coefficient of a diagram given with an explicit labelling; the sign
  // relating the labelling to the canonical representative is folded in, so
  // this reads off the coefficient "in the orientation of d".
  ParamPoly coefficient(const RawDiagram& d) const;
  // Subsum of terms satisfying pred.
  template <class Pred>
  DiagramSum filter(Pred pred) const {
    DiagramSum out(max_degree_);
    for (const auto& [d, c] : terms_)
      if (pred(d)) out.add_canonical(d, c);
    return out;
  }
  // Substitute q := p in every coefficient.
  DiagramSum diagonal() const;
  // Evaluate every coefficient at (p, q); result still a DiagramSum with
  // constant coefficients.
  DiagramSum evaluate(const Rational& p, const Rational& q) const;
  // Multiply the coefficient of each term by scale^degree.
  DiagramSum degree_scaled(const Rational& scale) const;
  // Shift the p-exponent of each term's coefficient by p_shift_per_degree *
  // degree (used for the p^{-2 deg} rescaling of diagonal limits).
  DiagramSum degree_shifted(long p_shift_per_degree) const;

  DiagramSum operator+(const DiagramSum& o) const;
  DiagramSum operator-(const DiagramSum& o) const;
  DiagramSum operator*(const ParamPoly& c) const;
  // Disjoint-union product, truncated.
  DiagramSum operator*(const DiagramSum& o) const;

  bool operator==(const DiagramSum& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  long max_degree_;
  std::map<CanonicalDiagram, ParamPoly> terms_;
};

// exp of a sum with no degree-0 term.
DiagramSum sum_exp(const DiagramSum& a);
// Multiplicative inverse of a sum with constant term 1 (coefficient of the
// empty diagram must be exactly 1).
DiagramSum sum_inverse(const DiagramSum& a);

// Map a one-variable power series f = sum_n f_n h^n to sum_n f_n w_n, where
// w_n is the n-wheel (n >= 2; odd wheels are zero and are skipped, and any
// h^0, h^1 terms must vanish).
DiagramSum wheel_sum(const LaurentSeries& f, long max_degree);

}  // namespace knotasym
