// Labeled gluing graphs: finite multigraphs with vertices labeled in
// {x, y, z}, a cyclic orientation of edge-ends at every vertex, no loops, and
// (for the graphs of the torus expansion) no x-x or y-y edges.  Substituting
// wheel series for vertices and summing over cyclic-order-respecting gluings
// turns a graph sum into a diagram sum; the tree case collapses to a closed
// per-vertex derivative formula.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotasym/jacobi.hpp"
#include "knotasym/jacobi_quotient.hpp"
#include "knotasym/laurent.hpp"

namespace knotasym {

struct GlueGraph {
  // Edge i owns half-edges 2i and 2i+1; adj[v] lists v's half-edges in
  // cyclic order.
  std::vector<char> labels;  // 'x', 'y' or 'z' per vertex
  std::vector<std::vector<int>> adj;

  int n_vertices() const { return static_cast<int>(labels.size()); }
  int n_edges() const;
  int valency(int v) const { return static_cast<int>(adj[v].size()); }
  int he_vertex(int he) const;
  void validate() const;
  bool is_tree() const;  // connected with |E| = |V| - 1

  // Build from an edge list; cyclic orders follow incidence order.
  static GlueGraph from_edges(std::vector<char> labels,
                              const std::vector<std::pair<int, int>>& edges);
};

// Canonical code of an isomorphism class (label- and cyclic-order-
// preserving isomorphisms).  If aut_out is non-null it receives |aut|.
std::vector<int> canonical_graph(const GlueGraph& g, long* aut_out = nullptr);

// Independent |aut| recount by exhaustive (vertex permutation, rotation)
// search; exponential, for cross-checking small graphs.
long automorphism_count_bruteforce(const GlueGraph& g);

struct GraphClass {
  GlueGraph graph;
  std::vector<int> code;
  long aut = 1;
};

struct GraphConstraints {
  int max_edges = 1;
  int min_edges = 0;
  int max_isolated = 0;   // edge-less vertices allowed up to this many
  bool trees_only = false;
  bool forbid_xx_yy = true;
};

// Complete duplicate-free enumeration of isomorphism classes.  `seed`
// shuffles the generation order only; the resulting class list (sorted by
// code) must not depend on it.
std::vector<GraphClass> enumerate_graphs(const GraphConstraints& c, unsigned seed = 0);

// Wheel series for substitution: coefficient of the n-wheel, indexed by n.
using WheelCoeffs = std::vector<ParamPoly>;

// wh(sign * F(p^a q^b h)): n-th coefficient sign * F_n p^{an} q^{bn}.
WheelCoeffs scaled_wheel_coeffs(long a, long b, int sign, long top);
// The torus decoration f(x) = F(ph), f(y) = F(qh), f(z) = -F(pqh).
std::map<char, WheelCoeffs> torus_substitution(long top);

// sum_n coeffs[n] * (n-wheel), truncated.
DiagramSum param_wheel_sum(const WheelCoeffs& coeffs, long max_degree);

// Replace each vertex by a wheel from f(label), glue the edges in all
// cyclic-order-preserving ways, and sum, truncated in degree.
DiagramSum sub_bruteforce(const GlueGraph& g, const std::map<char, WheelCoeffs>& f,
                          long max_degree);

// Per-vertex closed form for trees: vertex v carries f(label)^{(k_v)} / (k_v-1)!.
struct TreeVertexSeries {
  int vertex = 0;
  char label = 'x';
  int k = 0;
  LaurentSeries series;  // in the variable "y"
};
std::vector<TreeVertexSeries> sub_tree_closed(const GlueGraph& tree,
                                              const std::map<char, LaurentSeries>& f);

// Same, but the decorations are given by their first derivative (needed when
// the base function is not itself a Laurent series, like (1/2)log sinh(h/2));
// every vertex must have valency >= 1, and vertex v gets
// f'(label)^{(k_v - 1)} / (k_v - 1)!.
std::vector<TreeVertexSeries> sub_tree_closed_from_deriv(
    const GlueGraph& tree, const std::map<char, LaurentSeries>& f_prime);

// Laurent expansion of a decoration: exponent of y -> coefficient.
using LaurentCoeffs = std::map<long, ParamPoly>;

// Expansion of sign * s^k * g(s*y) for s = p^a q^b, as coefficients in y:
// the y^m coefficient is sign * g_m * p^{a(m+k)} q^{b(m+k)}.  Used for the
// finite-parameter vertex decorations, where g is already the k-th
// derivative of the base series divided by (k-1)!.
LaurentCoeffs scale_decoration(const LaurentSeries& g, long k, long a, long b, int sign);

// Re-glue per-vertex Laurent expansions into diagrams: the y^{m_v} term puts
// a wheel of size n_v = m_v + k_v at v, averaged over the k_v * C(n_v, k_v)
// cyclic gluings (so trees re-glue to the same projected sum the brute force
// produces).  Negative exponents cannot be glued and are reported.
struct ReglueResult {
  DiagramSum sum;
  std::vector<std::pair<std::string, ParamPoly>> singular;
};
ReglueResult tree_reglue(const GlueGraph& tree, const std::vector<LaurentCoeffs>& per_vertex,
                         long max_degree);

// Eq-style identity check: compare
//   d_{Omega^{-1}}(_q Omega . Omega_p exp(pq/2 strut))
// against the graph expansion sub(G, f) * exp(pq/2 strut), both projected.
struct EqSubReport {
  bool equal = false;
  std::string first_discrepancy;
  DiagramSum lhs{0}, rhs{0};  // projected to the quotient basis
};
EqSubReport verify_eq_sub(long max_degree, const QuotientBasis& q);

// Tree expansion of the asymptotic integral: trees with the limit
// decorations z: F^{+(k)}(y)/(k-1)!, x/y: -1/(2 y^k), weight 1/|aut|, under
// a global exp(Theta/48).
struct DecoratedTree {
  GlueGraph graph;
  long aut = 1;
  std::vector<TreeVertexSeries> decorations;
  // The diagram obtained by gluing the edges at each vertex to a circle in
  // cyclic order (a wheel of size = valency at every vertex); may be zero
  // modulo AS, the code is kept as a skeleton either way.
  CanonicalDiagram gamma_circle;
};
std::vector<DecoratedTree> tree_expansion(int max_edges, long series_order);

// Finite-p tree formula check (report, not assert): LHS = the torus
// expansion restricted to terms all of whose components have first Betti
// number >= 2; RHS = exp(pq Theta/48)/<Omega,Omega> times the tree sum with
// the finite-p decorations, re-glued.  Singular (negative-power) terms are
// collected, not raised.
struct NtorReport {
  bool regular_equal = false;
  std::vector<std::string> mismatches;
  std::vector<std::pair<std::string, ParamPoly>> singular;
  DiagramSum lhs{0}, rhs{0};  // projected
};
NtorReport verify_eq_ntor_finite_p(long max_degree, const QuotientBasis& q);

// True iff every connected component of the diagram has first Betti number
// >= 2 (no struts, no wheels) and the diagram is non-empty.
bool all_components_betti_ge2(const CanonicalDiagram& d);

}  // namespace knotasym
