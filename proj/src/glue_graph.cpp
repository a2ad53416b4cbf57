#include "knotasym/glue_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "knotasym/jacobi_ops.hpp"
#include "knotasym/special_series.hpp"

namespace knotasym {
namespace {

int label_code(char c) {
  switch (c) {
    case 'x': return 1;
    case 'y': return 2;
    case 'z': return 3;
    default: throw std::invalid_argument("glue graph: label must be x, y or z");
  }
}

struct VertexUF {
  std::vector<int> parent;
  explicit VertexUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Canonical code of one edge-connected component, by exhaustive placement
// search (vertex order x rotation per vertex); the number of placements
// realizing the minimal code equals |aut| of the component, since two
// minimal placements differ by a label- and cyclic-order-preserving
// automorphism and composing a minimal placement with any automorphism is
// again minimal.
struct ComponentSearch {
  const GlueGraph& g;
  std::vector<int> verts;
  std::vector<int> he_pos;   // global half-edge -> placement index, -1 unset
  std::vector<char> placed;  // per vertex
  std::vector<int> cur;
  std::vector<int> best;
  long count = 0;
  bool have_best = false;
  int next_he = 0;

  ComponentSearch(const GlueGraph& graph, std::vector<int> vs)
      : g(graph), verts(std::move(vs)), he_pos(2 * graph.n_edges(), -1),
        placed(graph.n_vertices(), 0) {
    cur.push_back(static_cast<int>(verts.size()));
  }

  void run() {
    for (int v : verts)
      for (int r = 0; r < std::max(1, g.valency(v)); ++r) place(v, r, 1);
    if (!have_best) throw std::logic_error("glue graph: empty component");
  }

  void place(int v, int r, size_t depth) {
    const int k = g.valency(v);
    const size_t row_start = cur.size();
    placed[v] = 1;
    cur.push_back(label_code(g.labels[v]));
    cur.push_back(k);
    for (int j = 0; j < k; ++j) {
      int he = g.adj[v][(r + j) % k];
      int p = he ^ 1;
      cur.push_back(he_pos[p] >= 0 ? 2 + he_pos[p] : 0);
      he_pos[he] = next_he++;
    }
    if (depth == verts.size()) {
      if (!have_best || cur < best) {
        best = cur;
        count = 1;
        have_best = true;
      } else if (cur == best) {
        ++count;
      }
    } else if (!have_best || !prefix_beats_best()) {
      for (int u : verts) {
        if (placed[u] || !adjacent_to_placed(u)) continue;
        for (int r2 = 0; r2 < g.valency(u); ++r2) place(u, r2, depth + 1);
      }
    }
    for (int j = 0; j < k; ++j) he_pos[g.adj[v][(r + j) % k]] = -1;
    next_he -= k;
    cur.resize(row_start);
    placed[v] = 0;
  }

  bool prefix_beats_best() const {
    // true iff cur > best on cur's length (prune: cannot reach the minimum)
    size_t n = std::min(cur.size(), best.size());
    for (size_t i = 0; i < n; ++i) {
      if (cur[i] < best[i]) return false;
      if (cur[i] > best[i]) return true;
    }
    return false;
  }

  bool adjacent_to_placed(int u) const {
    for (int he : g.adj[u])
      if (he_pos[he ^ 1] >= 0) return true;
    return false;
  }
};

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= (long)(n - i);
    r /= (long)(i + 1);
  }
  return r;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k == 0)
    fn({});
  else
    rec(0, 0);
}

// All cyclic-order-respecting gluings of the graph's edges to legs of wheels
// of the given sizes (wheel[v] >= valency(v)); calls sink for each resulting
// labelled diagram.  A vertex of valency k and wheel size n has C(n,k)*k
// gluings (choice of leg subset times rotation).
void for_each_gluing(const GlueGraph& g, const std::vector<int>& wheel,
                     const std::function<void(const RawDiagram&)>& sink) {
  const int V = g.n_vertices();
  const int E = g.n_edges();
  std::vector<int> off(V + 1, 0);
  for (int v = 0; v < V; ++v) off[v + 1] = off[v] + wheel[v];
  const int total_tri = off[V];

  // position of each half-edge inside its vertex's cyclic list
  std::vector<int> he_owner(2 * E, -1), he_slot(2 * E, -1);
  for (int v = 0; v < V; ++v)
    for (size_t j = 0; j < g.adj[v].size(); ++j) {
      he_owner[g.adj[v][j]] = v;
      he_slot[g.adj[v][j]] = static_cast<int>(j);
    }

  // per-vertex choices: (sorted leg subset, rotation)
  std::vector<std::vector<std::pair<std::vector<int>, int>>> choices(V);
  for (int v = 0; v < V; ++v) {
    const int k = g.valency(v);
    if (k == 0) {
      choices[v].push_back({{}, 0});
      continue;
    }
    if (wheel[v] < k) return;  // no gluing possible
    for_each_subset(wheel[v], k, [&](const std::vector<int>& pick) {
      for (int r = 0; r < k; ++r) choices[v].push_back({pick, r});
    });
  }

  RawDiagram base;
  base.n_tri = total_tri;
  base.partner.assign(3 * total_tri, kLeg);
  for (int v = 0; v < V; ++v) {
    const int n = wheel[v];
    for (int t = 0; t < n; ++t) {
      int a = off[v] + t, b = off[v] + (t + 1) % n;
      base.partner[3 * a + 1] = 3 * b + 0;
      base.partner[3 * b + 0] = 3 * a + 1;
    }
  }

  std::vector<size_t> idx(V, 0);
  for (;;) {
    RawDiagram raw = base;
    for (int e = 0; e < E; ++e) {
      int hu = 2 * e, hw = 2 * e + 1;
      int u = he_owner[hu], w = he_owner[hw];
      const auto& [su, ru] = choices[u][idx[u]];
      const auto& [sw, rw] = choices[w][idx[w]];
      int ku = g.valency(u), kw = g.valency(w);
      int leg_u = su[(he_slot[hu] + ru) % ku];
      int leg_w = sw[(he_slot[hw] + rw) % kw];
      int a = 3 * (off[u] + leg_u) + 2, b = 3 * (off[w] + leg_w) + 2;
      raw.partner[a] = b;
      raw.partner[b] = a;
    }
    sink(raw);
    int v = 0;
    while (v < V && ++idx[v] == choices[v].size()) idx[v++] = 0;
    if (v == V) break;
  }
}

char label_of_code(int c) { return c == 1 ? 'x' : c == 2 ? 'y' : 'z'; }

}  // namespace

int GlueGraph::n_edges() const {
  size_t h = 0;
  for (const auto& a : adj) h += a.size();
  return static_cast<int>(h / 2);
}

int GlueGraph::he_vertex(int he) const {
  for (int v = 0; v < n_vertices(); ++v)
    for (int x : adj[v])
      if (x == he) return v;
  throw std::out_of_range("glue graph: unknown half-edge");
}

void GlueGraph::validate() const {
  const int E = n_edges();
  std::vector<int> seen(2 * E, 0);
  for (int v = 0; v < n_vertices(); ++v) {
    label_code(labels[v]);
    for (int he : adj[v]) {
      if (he < 0 || he >= 2 * E || seen[he]++)
        throw std::invalid_argument("glue graph: bad half-edge incidence");
    }
  }
  for (int v = 0; v < n_vertices(); ++v)
    for (int he : adj[v])
      if (he_vertex(he ^ 1) == v) throw std::invalid_argument("glue graph: loop edge");
}

bool GlueGraph::is_tree() const {
  const int V = n_vertices();
  if (V == 0) return false;
  if (n_edges() != V - 1) return false;
  VertexUF uf(V);
  for (int v = 0; v < V; ++v)
    for (int he : adj[v]) uf.unite(v, he_vertex(he ^ 1));
  for (int v = 1; v < V; ++v)
    if (uf.find(v) != uf.find(0)) return false;
  return true;
}

GlueGraph GlueGraph::from_edges(std::vector<char> labels,
                                const std::vector<std::pair<int, int>>& edges) {
  GlueGraph g;
  g.labels = std::move(labels);
  g.adj.resize(g.labels.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    g.adj.at(u).push_back(static_cast<int>(2 * e));
    g.adj.at(v).push_back(static_cast<int>(2 * e + 1));
  }
  g.validate();
  return g;
}

std::vector<int> canonical_graph(const GlueGraph& g, long* aut_out) {
  const int V = g.n_vertices();
  VertexUF uf(V);
  for (int v = 0; v < V; ++v)
    for (int he : g.adj[v]) uf.unite(v, g.he_vertex(he ^ 1));
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < V; ++v) comps[uf.find(v)].push_back(v);

  std::vector<std::vector<int>> blocks;
  long aut = 1;
  for (auto& [root, vs] : comps) {
    if (vs.size() == 1 && g.valency(vs[0]) == 0) {
      blocks.push_back({1, label_code(g.labels[vs[0]]), 0});
      continue;
    }
    ComponentSearch cs(g, vs);
    cs.run();
    blocks.push_back(cs.best);
    aut *= cs.count;
  }
  std::sort(blocks.begin(), blocks.end());
  for (size_t i = 0; i < blocks.size();) {
    size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    for (size_t m = 2; m <= j - i; ++m) aut *= static_cast<long>(m);
    i = j;
  }
  std::vector<int> code;
  for (const auto& b : blocks) code.insert(code.end(), b.begin(), b.end());
  if (aut_out) *aut_out = aut;
  return code;
}

long automorphism_count_bruteforce(const GlueGraph& g) {
  const int V = g.n_vertices();
  const int E = g.n_edges();
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v)
      ok = g.labels[v] == g.labels[perm[v]] && g.valency(v) == g.valency(perm[v]);
    if (!ok) continue;
    // iterate rotation tuples over vertices of positive valency
    std::vector<int> active;
    for (int v = 0; v < V; ++v)
      if (g.valency(v) > 0) active.push_back(v);
    std::vector<int> rot(active.size(), 0);
    for (;;) {
      std::vector<int> phi(2 * E, -1);
      for (size_t ai = 0; ai < active.size(); ++ai) {
        int v = active[ai], k = g.valency(v);
        for (int j = 0; j < k; ++j) phi[g.adj[v][j]] = g.adj[perm[v]][(j + rot[ai]) % k];
      }
      bool valid = true;
      for (int he = 0; he < 2 * E && valid; ++he) valid = phi[he ^ 1] == (phi[he] ^ 1);
      if (valid) ++total;
      size_t i = 0;
      while (i < active.size() && ++rot[i] == g.valency(active[i])) rot[i++] = 0;
      if (i == active.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<GraphClass> enumerate_graphs(const GraphConstraints& c, unsigned seed) {
  std::map<std::vector<int>, GraphClass> seen;
  std::vector<GlueGraph> candidates;

  const std::string alphabet = "xyz";
  for (int e = std::max(1, c.min_edges); e <= c.max_edges; ++e) {
    for (int nv = 2; nv <= 2 * e; ++nv) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) pairs.push_back({u, v});
      // multisets of e pairs, indices non-decreasing
      std::vector<int> pick(e, 0);
      std::function<void(int, int)> rec_edges = [&](int start, int depth) {
        if (depth == e) {
          std::vector<std::pair<int, int>> edges;
          std::vector<int> degv(nv, 0);
          for (int i = 0; i < e; ++i) {
            edges.push_back(pairs[pick[i]]);
            ++degv[pairs[pick[i]].first];
            ++degv[pairs[pick[i]].second];
          }
          for (int v = 0; v < nv; ++v)
            if (degv[v] == 0) return;  // no vertex may be isolated here
          // label assignments
          std::vector<char> lab(nv, 'x');
          std::function<void(int)> rec_labels = [&](int v) {
            if (v == nv) {
              if (c.forbid_xx_yy)
                for (const auto& [a, b] : edges)
                  if (lab[a] == lab[b] && lab[a] != 'z') return;
              GlueGraph base = GlueGraph::from_edges(lab, edges);
              // all cyclic orders: permute each adj list beyond its first entry
              std::function<void(int)> rec_cyc = [&](int w) {
                if (w == nv) {
                  candidates.push_back(base);
                  return;
                }
                auto& a = base.adj[w];
                if (a.size() <= 2) {
                  rec_cyc(w + 1);
                  return;
                }
                std::vector<int> tail(a.begin() + 1, a.end());
                std::sort(tail.begin(), tail.end());
                do {
                  std::copy(tail.begin(), tail.end(), a.begin() + 1);
                  rec_cyc(w + 1);
                } while (std::next_permutation(tail.begin(), tail.end()));
                std::sort(tail.begin(), tail.end());
                std::copy(tail.begin(), tail.end(), a.begin() + 1);
                return;
              };
              rec_cyc(0);
              return;
            }
            for (char ch : alphabet) {
              lab[v] = ch;
              rec_labels(v + 1);
            }
          };
          rec_labels(0);
          return;
        }
        for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
          pick[depth] = i;
          rec_edges(i, depth + 1);
        }
      };
      rec_edges(0, 0);
    }
  }

  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  auto consider = [&](const GlueGraph& g) {
    if (c.trees_only && !g.is_tree()) return;
    long aut = 1;
    auto code = canonical_graph(g, &aut);
    seen.emplace(code, GraphClass{g, code, aut});
  };
  for (const auto& g : candidates) consider(g);

  if (c.min_edges == 0 && !c.trees_only) {
    GlueGraph empty;
    seen.emplace(std::vector<int>{}, GraphClass{empty, {}, 1});
  }

  if (c.max_isolated > 0 && !c.trees_only) {
    std::vector<GraphClass> bases;
    for (const auto& [code, cls] : seen) bases.push_back(cls);
    // label multisets of each size
    std::function<void(const GlueGraph&, char, int)> extend = [&](const GlueGraph& b,
                                                                  char min_label, int left) {
      if (left == 0) return;
      for (char ch : alphabet) {
        if (ch < min_label) continue;
        GlueGraph g = b;
        g.labels.push_back(ch);
        g.adj.emplace_back();
        consider(g);
        extend(g, ch, left - 1);
      }
    };
    for (const auto& cls : bases) extend(cls.graph, 'a', c.max_isolated);
  }

  std::vector<GraphClass> out;
  for (auto& [code, cls] : seen)
    if (cls.graph.n_edges() >= c.min_edges) out.push_back(std::move(cls));
  return out;
}

WheelCoeffs scaled_wheel_coeffs(long a, long b, int sign, long top) {
  LaurentSeries F = wheel_series_F(top);
  WheelCoeffs out(top + 1);
  for (long n = 0; n <= top; ++n) {
    Rational c = F.coeff(n);
    if (c == 0) continue;
    out[n] = ParamPoly::monomial(sign > 0 ? c : -c, a * n, b * n);
  }
  return out;
}

std::map<char, WheelCoeffs> torus_substitution(long top) {
  return {{'x', scaled_wheel_coeffs(1, 0, +1, top)},
          {'y', scaled_wheel_coeffs(0, 1, +1, top)},
          {'z', scaled_wheel_coeffs(1, 1, -1, top)}};
}

DiagramSum param_wheel_sum(const WheelCoeffs& coeffs, long max_degree) {
  DiagramSum out(max_degree);
  for (long n = 2; n < static_cast<long>(coeffs.size()) && n <= max_degree; ++n)
    if (!coeffs[n].is_zero()) out.add(RawDiagram::wheel(static_cast<int>(n)), coeffs[n]);
  return out;
}

DiagramSum sub_bruteforce(const GlueGraph& g, const std::map<char, WheelCoeffs>& f,
                          long max_degree) {
  const int V = g.n_vertices();
  const long E = g.n_edges();
  DiagramSum out(max_degree);
  std::vector<int> wheel(V, 0);
  std::function<void(int, long)> rec = [&](int v, long used) {
    if (v == V) {
      ParamPoly coeff(Rational(1));
      for (int u = 0; u < V; ++u) coeff = coeff * f.at(g.labels[u])[wheel[u]];
      if (coeff.is_zero()) return;
      for_each_gluing(g, wheel, [&](const RawDiagram& raw) { out.add(raw, coeff); });
      return;
    }
    const auto& fv = f.at(g.labels[v]);
    for (long n = std::max(1, g.valency(v)); used + n <= max_degree + E; ++n) {
      if (n >= static_cast<long>(fv.size()) || fv[n].is_zero()) continue;
      wheel[v] = static_cast<int>(n);
      rec(v + 1, used + n);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<TreeVertexSeries> sub_tree_closed(const GlueGraph& tree,
                                              const std::map<char, LaurentSeries>& f) {
  std::vector<TreeVertexSeries> out;
  for (int v = 0; v < tree.n_vertices(); ++v) {
    const int k = tree.valency(v);
    LaurentSeries s = f.at(tree.labels[v]);
    for (int i = 0; i < k; ++i) s = s.derivative();
    if (k >= 1) s = (Rational(1) / Rational(factorial((unsigned long)(k - 1)))) * s;
    out.push_back({v, tree.labels[v], k, s});
  }
  return out;
}

std::vector<TreeVertexSeries> sub_tree_closed_from_deriv(
    const GlueGraph& tree, const std::map<char, LaurentSeries>& f_prime) {
  std::vector<TreeVertexSeries> out;
  for (int v = 0; v < tree.n_vertices(); ++v) {
    const int k = tree.valency(v);
    if (k < 1)
      throw std::invalid_argument("sub_tree_closed_from_deriv: isolated vertex");
    LaurentSeries s = f_prime.at(tree.labels[v]);
    for (int i = 1; i < k; ++i) s = s.derivative();
    out.push_back({v, tree.labels[v], k,
                   (Rational(1) / Rational(factorial((unsigned long)(k - 1)))) * s});
  }
  return out;
}

LaurentCoeffs scale_decoration(const LaurentSeries& g, long k, long a, long b, int sign) {
  LaurentCoeffs out;
  for (long m = g.valuation(); m <= g.order(); ++m) {
    Rational c = g.coeff(m);
    if (c == 0) continue;
    out[m] = ParamPoly::monomial(sign > 0 ? c : -c, a * (m + k), b * (m + k));
  }
  return out;
}

ReglueResult tree_reglue(const GlueGraph& tree, const std::vector<LaurentCoeffs>& per_vertex,
                         long max_degree) {
  const int V = tree.n_vertices();
  const long E = tree.n_edges();
  ReglueResult rr{DiagramSum(max_degree), {}};
  std::map<std::string, ParamPoly> singular;

  std::vector<long> m(V, 0);
  std::vector<ParamPoly> cv(V);
  std::function<void(int)> rec = [&](int v) {
    if (v == V) {
      bool sing = false;
      long deg = -E;
      for (int u = 0; u < V; ++u) {
        if (m[u] < 0) sing = true;
        deg += m[u] + tree.valency(u);
      }
      ParamPoly coeff(Rational(1));
      for (int u = 0; u < V; ++u) coeff = coeff * cv[u];
      if (coeff.is_zero()) return;
      if (sing) {
        std::ostringstream key;
        std::vector<std::string> parts;
        for (int u = 0; u < V; ++u) {
          std::ostringstream p;
          p << tree.labels[u] << ":k=" << tree.valency(u) << ",m=" << m[u];
          parts.push_back(p.str());
        }
        std::sort(parts.begin(), parts.end());
        key << "vertices{";
        for (size_t i = 0; i < parts.size(); ++i) key << (i ? " " : "") << parts[i];
        key << "}";
        singular[key.str()] += coeff;
        return;
      }
      if (deg > max_degree) return;
      std::vector<int> wheel(V);
      Rational avg(1);
      for (int u = 0; u < V; ++u) {
        long n = m[u] + tree.valency(u);
        wheel[u] = static_cast<int>(n);
        if (tree.valency(u) >= 1)
          avg /= Rational(tree.valency(u)) * binomial(n, tree.valency(u));
      }
      ParamPoly w = avg * coeff;
      for_each_gluing(tree, wheel, [&](const RawDiagram& raw) { rr.sum.add(raw, w); });
      return;
    }
    for (const auto& [mm, c] : per_vertex[v]) {
      m[v] = mm;
      cv[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
  for (auto& [k, v] : singular)
    if (!v.is_zero()) rr.singular.push_back({k, v});
  return rr;
}

bool all_components_betti_ge2(const CanonicalDiagram& d) {
  if (d.n_struts > 0) return false;
  const auto& code = d.code;
  if (code.size() < 2) return true;  // empty diagram
  size_t i = 2;
  int n_comps = code[1];
  for (int c = 0; c < n_comps; ++c) {
    int n = code[i++];
    int legs = 0;
    for (int r = 0; r < 3 * n; ++r)
      if (code[i + r] == 1) ++legs;
    i += 3 * n;
    long internal_edges = (3L * n - legs) / 2;
    if (internal_edges - n + 1 < 2) return false;
  }
  return true;
}

EqSubReport verify_eq_sub(long max_degree, const QuotientBasis& q) {
  const long d = max_degree;
  const ParamPoly pq_half = ParamPoly::monomial(Rational(1, 2), 1, 1);

  DiagramSum om = omega(d);
  DiagramSum lhs = partial_glue(omega(2 * d, -1), weighted_glue(om, om) * strut_exp(pq_half, d));

  auto f = torus_substitution(2 * d);
  GraphConstraints gc;
  gc.max_edges = static_cast<int>(d);
  gc.min_edges = 0;
  DiagramSum graph_part(d);
  for (const auto& cls : enumerate_graphs(gc)) {
    long E = cls.graph.n_edges();
    ParamPoly w = ParamPoly::monomial(Rational(1) / Rational(cls.aut), -E, -E);
    graph_part = graph_part + sub_bruteforce(cls.graph, f, d) * w;
  }
  // isolated vertices of every multiplicity enter as exponential factors
  DiagramSum rhs = graph_part;
  for (char ch : {'x', 'y', 'z'}) rhs = rhs * sum_exp(param_wheel_sum(f.at(ch), d));
  rhs = rhs * strut_exp(pq_half, d);

  EqSubReport rep;
  rep.lhs = q.project(lhs);
  rep.rhs = q.project(rhs);
  rep.equal = rep.lhs == rep.rhs;
  if (!rep.equal) {
    DiagramSum diff = rep.lhs - rep.rhs;
    const auto& t = *diff.terms().begin();
    rep.first_discrepancy = t.first.to_string() + " : " + t.second.to_string();
  }
  return rep;
}

std::vector<DecoratedTree> tree_expansion(int max_edges, long series_order) {
  GraphConstraints gc;
  gc.max_edges = max_edges;
  gc.min_edges = 1;
  gc.trees_only = true;
  std::vector<DecoratedTree> out;
  for (const auto& cls : enumerate_graphs(gc)) {
    DecoratedTree dt{cls.graph, cls.aut, {}, {}};
    std::vector<int> circle_wheels;
    for (int v = 0; v < cls.graph.n_vertices(); ++v)
      circle_wheels.push_back(cls.graph.valency(v));
    for_each_gluing(cls.graph, circle_wheels,
                    [&](const RawDiagram& raw) { dt.gamma_circle = canonicalize(raw).diagram; });
    for (int v = 0; v < cls.graph.n_vertices(); ++v) {
      const int k = cls.graph.valency(v);
      char lab = cls.graph.labels[v];
      LaurentSeries s;
      if (lab == 'z')
        s = (Rational(1) / Rational(factorial((unsigned long)(k - 1)))) * f_plus_deriv(k, series_order, "y");
      else
        s = LaurentSeries::monomial("y", Rational(-1, 2), -k);
      dt.decorations.push_back({v, lab, k, s});
    }
    out.push_back(std::move(dt));
  }
  return out;
}

NtorReport verify_eq_ntor_finite_p(long max_degree, const QuotientBasis& q) {
  const long d = max_degree;
  NtorReport rep;

  auto keep = [](const CanonicalDiagram& dg) {
    return dg.degree() > 0 && all_components_betti_ge2(dg);
  };
  DiagramSum lhs = z_torus(d).filter(keep);

  // a tree with E edges contributes only in degree >= E + 2
  GraphConstraints gc;
  gc.max_edges = static_cast<int>(std::max(1L, d - 2));
  gc.min_edges = 1;
  gc.trees_only = true;

  DiagramSum tree_part(d);
  tree_part.add(RawDiagram::empty(), ParamPoly(Rational(1)));
  std::map<std::string, ParamPoly> singular;
  for (const auto& cls : enumerate_graphs(gc)) {
    const long E = cls.graph.n_edges();
    std::vector<LaurentCoeffs> per_vertex;
    for (int v = 0; v < cls.graph.n_vertices(); ++v) {
      const int k = cls.graph.valency(v);
      LaurentSeries g = (Rational(1) / Rational(factorial((unsigned long)(k - 1)))) * f_plus_deriv(k, d + E - k, "y");
      char lab = cls.graph.labels[v];
      long a = lab == 'y' ? 0 : 1;
      long b = lab == 'x' ? 0 : 1;
      per_vertex.push_back(scale_decoration(g, k, a, b, lab == 'z' ? -1 : +1));
    }
    ReglueResult rr = tree_reglue(cls.graph, per_vertex, d);
    ParamPoly w = ParamPoly::monomial(Rational(1) / Rational(cls.aut), -E, -E);
    tree_part = tree_part + rr.sum * w;
    for (const auto& [key, c] : rr.singular) singular[key] += c * w;
  }
  const ParamPoly pq_48 = ParamPoly::monomial(Rational(1, 48), 1, 1);
  DiagramSum rhs = theta_exp(pq_48, d) * sum_inverse(omega_bracket(d)) * tree_part;
  rhs = rhs.filter(keep);

  rep.lhs = q.project(lhs);
  rep.rhs = q.project(rhs);
  DiagramSum diff = rep.lhs - rep.rhs;
  for (const auto& [dg, c] : diff.terms())
    rep.mismatches.push_back(dg.to_string() + " : " + c.to_string());
  rep.regular_equal = rep.mismatches.empty();
  for (auto& [k, v] : singular)
    if (!v.is_zero()) rep.singular.push_back({k, v});
  return rep;
}

}  // namespace knotasym
