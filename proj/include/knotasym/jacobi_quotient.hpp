// The degree-truncated quotient of the span of diagrams by AS (built into
// canonicalization) and IHX.  Diagrams of each degree are enumerated
// exhaustively, one three-term IHX relation is generated per (internal edge,
// end) configuration, and the relation matrix is row-reduced exactly.
// Wheel-product diagrams are ordered last among the columns, so they stay
// unreduced basis elements whenever possible.
#pragma once

#include <map>
#include <vector>

#include "knotasym/jacobi.hpp"

namespace knotasym {

using Relation = std::map<CanonicalDiagram, Rational>;

// All canonical diagrams of degree <= max_degree that are nonzero mod AS,
// sorted.  `seed` permutes the internal enumeration order (the result set
// must not depend on it); `cap` aborts with an error if the intermediate
// state count explodes.
std::vector<CanonicalDiagram> enumerate_diagrams(long max_degree, unsigned seed = 0,
                                                 long cap = 200000);

struct QuotientBasis {
  long max_degree = 0;
  std::vector<CanonicalDiagram> basis;  // free diagrams, sorted
  std::map<long, long> dim_by_degree;
  // pivot diagram -> its expansion in basis diagrams
  std::map<CanonicalDiagram, Relation> reduction;
  std::vector<Relation> relations;  // every generated (deduplicated) relation

  bool is_basis(const CanonicalDiagram& d) const;
  // Rewrite every term through the reduction map.  Throws on a diagram the
  // enumeration never produced (that would mean the enumeration is
  // incomplete).
  DiagramSum project(const DiagramSum& s) const;
  Relation project_relation(const Relation& r) const;
};

QuotientBasis build_quotient(long max_degree, unsigned seed = 0, long cap = 200000);

}  // namespace knotasym
