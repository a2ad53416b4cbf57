#pragma once

// Closed-form knot polynomials of torus knots and their exponential
// expansions.  Everything is exact: the polynomials are Laurent polynomials
// in t, the expansions truncated series in h obtained by t = e^{c h}.

#include "knotasym/laurent.hpp"

namespace knotasym {

// t^{-(p-1)(q-1)/2} (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)); symmetric in p,q
LaurentSeries alexander_torus(long p, long q);

// t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2)
LaurentSeries jones_torus(long p, long q);

// substitute t = e^{c h} into an exact Laurent polynomial in t
LaurentSeries normalized_series(const LaurentSeries& poly, const Rational& c, long order);

// h^2-coefficient of alexander_torus(p,q)(e^h); equals the Casson invariant
Rational v2_from_alexander(long p, long q);

}  // namespace knotasym
