// Gluing operations on diagram sums and the closed-form expansions built from
// them.  All gluings run over leg sites (univalent vertices, including strut
// ends); a resolution that would join two legs of the same pre-gluing
// connected component is skipped (no self-chords: the expansions below are
// stated for loop-free gluing patterns, and the degree-1 structure of the
// torus expansion depends on it).  A resolution closing a chain of struts
// into a vertex-free loop is a hard error: none of the implemented pipelines
// can produce one, so reaching it means a bug.
#pragma once

#include "knotasym/jacobi.hpp"

namespace knotasym {

// A univalent vertex of a RawDiagram: either a trivalent vertex's free
// half-edge (he >= 0, strut == -1) or end 0/1 of a strut.
struct LegSite {
  int he = -1;
  int strut = -1;
  int end = 0;
};

std::vector<LegSite> leg_sites(const RawDiagram& d);

// Glue the given site pairs (indices into leg_sites(a) / leg_sites(b)) of one
// labelled diagram pair.  Returns nothing when a self-chord is produced;
// throws on a vertex-free loop.
std::optional<RawDiagram> glue_resolve(const RawDiagram& a, const RawDiagram& b,
                                       const std::vector<std::pair<int, int>>& pairs);

// <A,B>: sum over bijections between A-legs and B-legs; terms with unequal
// leg counts contribute 0.
DiagramSum glue_all(const DiagramSum& a, const DiagramSum& b);

// d_A(B): sum over injections of all A-legs into B-legs.
DiagramSum partial_glue(const DiagramSum& a, const DiagramSum& b);

// _qA.B_p: sum over partial matchings, each term weighted by
// q^{#unmatched A-legs} * p^{#unmatched B-legs}.
DiagramSum weighted_glue(const DiagramSum& a, const DiagramSum& b);

// Omega = exp(sum_n F_n w_n) with F = (1/2) log(sinh(h/2)/(h/2)); sign = -1
// gives its inverse exp(-wh(F)).
DiagramSum omega(long max_degree, int sign = +1);

// exp(c * strut) truncated.
DiagramSum strut_exp(const ParamPoly& c, long max_degree);
// exp(c * theta) truncated.
DiagramSum theta_exp(const ParamPoly& c, long max_degree);

// <Omega,Omega> to the given degree.
DiagramSum omega_bracket(long max_degree);

// The closed-form expansion of the torus family, symbolic in p and q:
//   d_{Omega^{-1}}( _q Omega . Omega_p exp(pq/2 strut) )
//     * exp(-pq/2 strut + pq/48 theta) / <Omega,Omega>.
// Not projected to any quotient.
DiagramSum z_torus(long max_degree);

// The degree-scaled limit of the above along q = p:
//   d_{Omega^{-1}}(exp(1/2 strut)) * exp(-1/2 strut + 1/48 theta),
// i.e. the limit at 2*sigma = 1; rescale with degree_scaled(2*sigma) for
// other slopes.  Constant (parameter-free) coefficients.
DiagramSum asymptotic_limit(long max_degree);

// p^{-2 deg} z(p, p), split by the sign of the surviving power of p.
struct ScaledDiagonal {
  DiagramSum negative;  // vanishing tail
  DiagramSum constant;  // the limit
  DiagramSum positive;  // must be empty
};
ScaledDiagonal scaled_diagonal_limit(const DiagramSum& z);

}  // namespace knotasym
