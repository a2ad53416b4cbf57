#include "knotasym/jacobi_ops.hpp"

#include <algorithm>
#include <functional>

#include "knotasym/special_series.hpp"

namespace knotasym {

std::vector<LegSite> leg_sites(const RawDiagram& d) {
  std::vector<LegSite> s;
  for (int h = 0; h < 3 * d.n_tri; ++h)
    if (d.partner[h] == kLeg) s.push_back({h, -1, 0});
  for (int t = 0; t < d.n_struts; ++t) {
    s.push_back({-1, t, 0});
    s.push_back({-1, t, 1});
  }
  return s;
}

namespace {

// Site ids in the combined diagram: a trivalent leg is its half-edge index;
// end e of strut s is 3*n_tri + 2*s + e.
int site_id(const LegSite& s, int he_off, int strut_off, int n_tri_total) {
  if (s.he >= 0) return s.he + he_off;
  return 3 * n_tri_total + 2 * (s.strut + strut_off) + s.end;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::optional<RawDiagram> glue_resolve(const RawDiagram& a, const RawDiagram& b,
                                       const std::vector<std::pair<int, int>>& pairs) {
  RawDiagram u = RawDiagram::disjoint_union(a, b);
  const auto sa = leg_sites(a);
  const auto sb = leg_sites(b);
  const int n3 = 3 * u.n_tri;
  const int n_sites = n3 + 2 * u.n_struts;

  std::vector<int> glue_to(n_sites, -1);
  for (auto [ia, ib] : pairs) {
    int x = site_id(sa.at(ia), 0, 0, u.n_tri);
    int y = site_id(sb.at(ib), 3 * a.n_tri, a.n_struts, u.n_tri);
    if (glue_to[x] != -1 || glue_to[y] != -1)
      throw std::invalid_argument("glue_resolve: site used twice");
    glue_to[x] = y;
    glue_to[y] = x;
  }

  // Components of the pre-gluing diagram (trivalent part only).
  UnionFind comp(std::max(1, u.n_tri));
  for (int h = 0; h < n3; ++h)
    if (u.partner[h] != kLeg) comp.join(h / 3, u.partner[h] / 3);

  auto sibling = [&](int id) { return n3 + ((id - n3) ^ 1); };
  std::vector<char> visited(n_sites, 0);

  // Chains starting at a trivalent leg: follow glue wires and strut bodies.
  // The far end is another trivalent leg (-> a new edge, subject to the
  // self-chord exclusion) or a dangling strut end (-> the leg survives).
  for (int h = 0; h < n3; ++h) {
    if (u.partner[h] != kLeg || visited[h]) continue;
    visited[h] = 1;
    if (glue_to[h] < 0) continue;
    int cur = glue_to[h];
    while (cur >= n3) {
      visited[cur] = 1;
      int other = sibling(cur);
      visited[other] = 1;
      if (glue_to[other] < 0) {
        cur = -1;  // dangling strut end: the chain keeps h a leg
        break;
      }
      cur = glue_to[other];
    }
    if (cur < 0) continue;
    visited[cur] = 1;
    if (comp.find(h / 3) == comp.find(cur / 3)) return std::nullopt;  // self-chord
    u.partner[h] = cur;
    u.partner[cur] = h;
  }

  // Remaining strut-only chains: each chain with two dangling ends collapses
  // to a single strut; a chain with no dangling end is a vertex-free loop.
  int surviving = 0;
  for (int id = n3; id < n_sites; ++id) {
    if (visited[id] || glue_to[id] >= 0) continue;
    // id is a dangling end of an unvisited chain.
    ++surviving;
    int cur = id;
    while (true) {
      visited[cur] = 1;
      int other = sibling(cur);
      visited[other] = 1;
      if (glue_to[other] < 0) break;
      cur = glue_to[other];
    }
  }
  for (int id = n3; id < n_sites; ++id)
    if (!visited[id])
      throw std::domain_error("glue_resolve: vertex-free loop produced");
  u.n_struts = surviving;
  return u;
}

namespace {

// Ordered m-tuples of distinct indices in [0, n).
void for_each_injection(int m, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(pick.size()) == m) {
      fn(pick);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      pick.push_back(j);
      rec();
      pick.pop_back();
      used[j] = 0;
    }
  };
  rec();
}

// Unordered m-subsets of [0, n).
void for_each_subset(int m, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == m) {
      fn(pick);
      return;
    }
    for (int j = start; j < n; ++j) {
      pick.push_back(j);
      rec(j + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

DiagramSum glue_all(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out(std::min(a.max_degree(), b.max_degree()));
  for (const auto& [da, ca] : a.terms()) {
    RawDiagram ra = decode(da);
    int la = da.n_legs + 2 * da.n_struts;
    for (const auto& [db, cb] : b.terms()) {
      int lb = db.n_legs + 2 * db.n_struts;
      if (la != lb) continue;
      if (da.degree() + db.degree() - la > out.max_degree()) continue;
      RawDiagram rb = decode(db);
      ParamPoly c = ca * cb;
      for_each_injection(la, lb, [&](const std::vector<int>& inj) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < la; ++i) pairs.emplace_back(i, inj[i]);
        if (auto r = glue_resolve(ra, rb, pairs)) out.add(*r, c);
      });
    }
  }
  return out;
}

DiagramSum partial_glue(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out(b.max_degree());
  for (const auto& [da, ca] : a.terms()) {
    RawDiagram ra = decode(da);
    int la = da.n_legs + 2 * da.n_struts;
    for (const auto& [db, cb] : b.terms()) {
      int lb = db.n_legs + 2 * db.n_struts;
      if (la > lb) continue;
      if (da.degree() + db.degree() - la > out.max_degree()) continue;
      RawDiagram rb = decode(db);
      ParamPoly c = ca * cb;
      for_each_injection(la, lb, [&](const std::vector<int>& inj) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < la; ++i) pairs.emplace_back(i, inj[i]);
        if (auto r = glue_resolve(ra, rb, pairs)) out.add(*r, c);
      });
    }
  }
  return out;
}

DiagramSum weighted_glue(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out(std::min(a.max_degree(), b.max_degree()));
  for (const auto& [da, ca] : a.terms()) {
    RawDiagram ra = decode(da);
    int la = da.n_legs + 2 * da.n_struts;
    for (const auto& [db, cb] : b.terms()) {
      int lb = db.n_legs + 2 * db.n_struts;
      RawDiagram rb = decode(db);
      ParamPoly cc = ca * cb;
      for (int m = 0; m <= std::min(la, lb); ++m) {
        if (da.degree() + db.degree() - m > out.max_degree()) continue;
        // weight q^{unmatched A legs} p^{unmatched B legs}
        ParamPoly c = cc.shifted(lb - m, la - m);
        for_each_subset(m, la, [&](const std::vector<int>& sub) {
          for_each_injection(m, lb, [&](const std::vector<int>& inj) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < m; ++i) pairs.emplace_back(sub[i], inj[i]);
            if (auto r = glue_resolve(ra, rb, pairs)) out.add(*r, c);
          });
        });
      }
    }
  }
  return out;
}

DiagramSum omega(long max_degree, int sign) {
  LaurentSeries f = wheel_series_F(max_degree);
  if (sign < 0) f = -f;
  return sum_exp(wheel_sum(f, max_degree));
}

DiagramSum strut_exp(const ParamPoly& c, long max_degree) {
  DiagramSum s(max_degree);
  s.add(RawDiagram::strut(), c);
  return sum_exp(s);
}

DiagramSum theta_exp(const ParamPoly& c, long max_degree) {
  DiagramSum s(max_degree);
  s.add(RawDiagram::theta(), c);
  return sum_exp(s);
}

DiagramSum omega_bracket(long max_degree) {
  DiagramSum om = omega(max_degree);
  return glue_all(om, om);
}

DiagramSum z_torus(long max_degree) {
  const long d = max_degree;
  ParamPoly pq_half = ParamPoly::monomial(rat(1, 2), 1, 1);
  ParamPoly pq_48 = ParamPoly::monomial(rat(1, 48), 1, 1);

  DiagramSum om = omega(d);
  DiagramSum x = weighted_glue(om, om) * strut_exp(pq_half, d);
  // Omega^{-1} needs wheels with up to 2d legs: x-terms carry at most 2d legs.
  DiagramSum y = partial_glue(omega(2 * d, -1), x);
  DiagramSum z = y * strut_exp(-pq_half, d) * theta_exp(pq_48, d);
  return z * sum_inverse(omega_bracket(d));
}

DiagramSum asymptotic_limit(long max_degree) {
  const long d = max_degree;
  ParamPoly half(rat(1, 2));
  DiagramSum y = partial_glue(omega(2 * d, -1), strut_exp(half, d));
  return y * strut_exp(ParamPoly(rat(-1, 2)), d) * theta_exp(ParamPoly(rat(1, 48)), d);
}

ScaledDiagonal scaled_diagonal_limit(const DiagramSum& z) {
  DiagramSum scaled = z.diagonal().degree_shifted(-2);
  ScaledDiagonal out{DiagramSum(z.max_degree()), DiagramSum(z.max_degree()),
                     DiagramSum(z.max_degree())};
  for (const auto& [d, c] : scaled.terms()) {
    out.negative.add_canonical(d, c.part_with([](long a, long) { return a < 0; }));
    out.constant.add_canonical(d, c.part_with([](long a, long) { return a == 0; }));
    out.positive.add_canonical(d, c.part_with([](long a, long) { return a > 0; }));
  }
  return out;
}

}  // namespace knotasym
