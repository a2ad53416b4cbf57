#pragma once

// Gauss diagrams of knots, braid closures, and the arrow-diagram pairing
// counting signed subdiagrams.
//
// A diagram with n arrows lives on 2n circle positions numbered 0..2n-1
// starting just after the base point.  Arrows run tail = under-passage to
// head = over-passage and carry the crossing sign.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotasym/rational.hpp"

namespace knotasym {

struct Arrow {
  int tail = 0;
  int head = 0;
  int sign = 1;
  bool operator==(const Arrow&) const = default;
};

struct GaussDiagram {
  std::vector<Arrow> arrows;

  int n() const { return (int)arrows.size(); }
  long writhe() const {
    long w = 0;
    for (const auto& a : arrows) w += a.sign;
    return w;
  }
  void validate() const;  // endpoints must tile 0..2n-1, signs in {-1,+1}
};

// Braid word: letter i > 0 means sigma_i, i < 0 means sigma_i^{-1}.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// Trace the closure of a braid; throws if the closure has more than one
// component.  Positive generators cross the left strand over the right.
GaussDiagram braid_closure_to_gauss(const BraidWord& w);

// (sigma_1 ... sigma_{p-1})^q on p strands; gcd(p,q)=1 required, p=1 or q=0
// give the empty diagram of the unknot.
GaussDiagram torus_knot_diagram(long p, long q);

BraidWord torus_braid_word(long p, long q);

// <Gamma, G>: signed count of n-arrow subdiagrams of G matching the pointed
// pattern of Gamma; each match weighs (product of matched crossing signs) *
// (product of Gamma's arrow signs).
Integer pairing(const GaussDiagram& gamma, const GaussDiagram& g);

// The degree-2 invariant as a pairing with a fixed two-arrow diagram,
// oriented so that casson(trefoil) = +1.
extern const GaussDiagram kCassonDiagram;
Integer casson(const GaussDiagram& g);

// one-arrow diagrams; pairing with their sum recovers the writhe
extern const GaussDiagram kArrowForward;   // tail 0 -> head 1
extern const GaussDiagram kArrowBackward;  // tail 1 -> head 0

nlohmann::json to_json(const GaussDiagram& g);
GaussDiagram gauss_from_json(const nlohmann::json& j);

}  // namespace knotasym
