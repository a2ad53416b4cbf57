#include "knotasym/jacobi_quotient.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "knotasym/eigen_rational.hpp"

namespace knotasym {

namespace {

// All canonical codes (including AS-zero ones, which are still needed as IHX
// sources) of diagrams whose trivalent part has n vertices, for all n with
// n <= 2*max_degree, with struts added afterwards.  Built by breadth-first
// gluing of leg pairs starting from n disjoint tripods; each gluing adds one
// internal edge, so level e holds exactly the e-edge diagrams.
std::vector<CanonicalDiagram> enumerate_states(long max_degree, unsigned seed, long cap) {
  std::mt19937 rng(seed ? seed : 0x9e3779b9u);
  std::vector<CanonicalDiagram> out;
  long total_states = 0;

  for (int n = 0; n <= 2 * max_degree; ++n) {
    RawDiagram start;
    start.n_tri = n;
    start.partner.assign(3 * n, kLeg);
    std::set<std::vector<int>> seen;
    std::vector<CanonicalDiagram> frontier{canonicalize(start).diagram};
    seen.insert(frontier.front().code);
    while (!frontier.empty()) {
      std::vector<CanonicalDiagram> next;
      for (const auto& st : frontier) {
        if (st.degree() <= max_degree) out.push_back(st);
        RawDiagram r = decode(st);
        std::vector<int> legs;
        for (int h = 0; h < 3 * r.n_tri; ++h)
          if (r.partner[h] == kLeg) legs.push_back(h);
        if (seed) std::shuffle(legs.begin(), legs.end(), rng);
        for (size_t i = 0; i < legs.size(); ++i)
          for (size_t j = i + 1; j < legs.size(); ++j) {
            RawDiagram g = r;
            g.partner[legs[i]] = legs[j];
            g.partner[legs[j]] = legs[i];
            auto c = canonicalize(g).diagram;
            if (seen.insert(c.code).second) {
              next.push_back(std::move(c));
              if (++total_states > cap)
                throw std::runtime_error("enumerate_diagrams: state cap exceeded");
            }
          }
      }
      frontier = std::move(next);
    }
  }

  // Struts: every diagram is (trivalent part) U (s struts).
  std::vector<CanonicalDiagram> with_struts;
  for (const auto& d : out) {
    with_struts.push_back(d);
    for (long s = 1; d.degree() + s <= max_degree; ++s) {
      RawDiagram r = decode(d);
      r.n_struts = static_cast<int>(s);
      with_struts.push_back(canonicalize(r).diagram);
    }
  }
  std::sort(with_struts.begin(), with_struts.end());
  return with_struts;
}

bool is_nonzero(const CanonicalDiagram& d) {
  return canonicalize(decode(d)).sign != 0;
}

// The three IHX terms around one (edge, end).  Labels a,b follow the edge
// counterclockwise at u, labels c,d at v; the identity
//   [(a,b,e),(e,c,d)] + [(b,c,e),(e,a,d)] + [(c,a,e),(e,b,d)] = 0
// is the Jacobi identity written on the edge e.
std::vector<RawDiagram> ihx_terms(const RawDiagram& d, int h) {
  int ph = d.partner[h];
  int u = h / 3, v = ph / 3;
  int ha = 3 * u + ((h % 3) + 1) % 3;
  int hb = 3 * u + ((h % 3) + 2) % 3;
  int hc = 3 * v + ((ph % 3) + 1) % 3;
  int hd = 3 * v + ((ph % 3) + 2) % 3;
  const int sites[4] = {ha, hb, hc, hd};

  // Original attachments of the four outer half-edges: a leg, a link to
  // another of the four, or an external half-edge.
  struct Conn {
    enum { LEG, LINK, EXT } kind;
    int target;  // label index for LINK, half-edge for EXT
  };
  Conn conn[4];
  for (int i = 0; i < 4; ++i) {
    int p = d.partner[sites[i]];
    if (p == kLeg) {
      conn[i] = {Conn::LEG, 0};
    } else {
      int link = -1;
      for (int j = 0; j < 4; ++j)
        if (sites[j] == p) link = j;
      conn[i] = link >= 0 ? Conn{Conn::LINK, link} : Conn{Conn::EXT, p};
    }
  }

  // site assignment per term: labels (a,b,c,d) -> physical sites.
  // term 1: u=(a,b,e) v=(e,c,d); term 2: u=(b,c,e) v=(e,a,d);
  // term 3: u=(c,a,e) v=(e,b,d).
  const int assign[3][4] = {{0, 1, 2, 3}, {2, 0, 1, 3}, {1, 2, 0, 3}};
  // assign[t][label] = which physical site (index into sites) label sits on.

  std::vector<RawDiagram> terms;
  for (int t = 0; t < 3; ++t) {
    RawDiagram r = d;
    for (int i = 0; i < 4; ++i) r.partner[sites[i]] = kLeg;  // clear, then rewire
    for (int label = 0; label < 4; ++label) {
      int s = sites[assign[t][label]];
      const Conn& c = conn[label];
      if (c.kind == Conn::LEG) {
        r.partner[s] = kLeg;
      } else if (c.kind == Conn::LINK) {
        int s2 = sites[assign[t][c.target]];
        r.partner[s] = s2;
        r.partner[s2] = s;
      } else {
        r.partner[s] = c.target;
        r.partner[c.target] = s;
      }
    }
    terms.push_back(std::move(r));
  }
  return terms;
}

Relation canonicalize_combination(const std::vector<RawDiagram>& raws) {
  Relation rel;
  for (const auto& r : raws) {
    auto c = canonicalize(r);
    if (c.sign == 0) continue;
    auto it = rel.find(c.diagram);
    if (it == rel.end()) {
      rel[c.diagram] = Rational(c.sign);
    } else {
      it->second += Rational(c.sign);
      if (it->second == 0) rel.erase(it);
    }
  }
  return rel;
}

// Scale so the first term has coefficient 1 (for deduplication).
Relation normalized(const Relation& r) {
  if (r.empty()) return r;
  Rational lead = r.begin()->second;
  Relation out;
  for (const auto& [d, c] : r) out[d] = c / lead;
  return out;
}

}  // namespace

std::vector<CanonicalDiagram> enumerate_diagrams(long max_degree, unsigned seed, long cap) {
  std::vector<CanonicalDiagram> out;
  for (const auto& d : enumerate_states(max_degree, seed, cap))
    if (is_nonzero(d)) out.push_back(d);
  return out;
}

bool QuotientBasis::is_basis(const CanonicalDiagram& d) const {
  return std::binary_search(basis.begin(), basis.end(), d);
}

DiagramSum QuotientBasis::project(const DiagramSum& s) const {
  DiagramSum out(s.max_degree());
  for (const auto& [d, c] : s.terms()) {
    auto it = reduction.find(d);
    if (it != reduction.end()) {
      for (const auto& [bd, bc] : it->second) out.add_canonical(bd, bc * c);
    } else if (is_basis(d)) {
      out.add_canonical(d, c);
    } else {
      throw std::domain_error("project: diagram outside the enumerated span: " + d.to_string());
    }
  }
  return out;
}

Relation QuotientBasis::project_relation(const Relation& r) const {
  Relation out;
  for (const auto& [d, c] : r) {
    auto add = [&](const CanonicalDiagram& bd, const Rational& bc) {
      auto it = out.find(bd);
      if (it == out.end()) {
        if (bc != 0) out[bd] = bc;
      } else {
        it->second += bc;
        if (it->second == 0) out.erase(it);
      }
    };
    auto it = reduction.find(d);
    if (it != reduction.end())
      for (const auto& [bd, bc] : it->second) add(bd, bc * c);
    else
      add(d, c);
  }
  return out;
}

QuotientBasis build_quotient(long max_degree, unsigned seed, long cap) {
  QuotientBasis qb;
  qb.max_degree = max_degree;

  auto states = enumerate_states(max_degree, seed, cap);
  std::vector<CanonicalDiagram> alive;
  for (const auto& d : states)
    if (is_nonzero(d)) alive.push_back(d);

  // Relations, generated from every state (an AS-zero diagram still yields a
  // valid relation between its two IHX rewirings).
  std::set<std::vector<std::pair<std::vector<int>, Rational>>> seen;
  for (const auto& st : states) {
    RawDiagram r = decode(st);
    for (int h = 0; h < 3 * r.n_tri; ++h) {
      int ph = r.partner[h];
      if (ph == kLeg || ph / 3 == h / 3) continue;  // leg or looped edge
      Relation rel = canonicalize_combination(ihx_terms(r, h));
      if (rel.empty()) continue;
      Relation norm = normalized(rel);
      std::vector<std::pair<std::vector<int>, Rational>> key;
      for (const auto& [d, c] : norm) key.emplace_back(d.code, c);
      if (seen.insert(std::move(key)).second) qb.relations.push_back(std::move(rel));
    }
  }

  // Row-reduce per degree.  Column order: non-wheel-products first, wheel
  // products last, so pivots land away from wheels whenever possible.
  std::map<long, std::vector<CanonicalDiagram>> cols_by_degree;
  for (const auto& d : alive) cols_by_degree[d.degree()].push_back(d);
  for (auto& [deg, cols] : cols_by_degree)
    std::stable_sort(cols.begin(), cols.end(),
                     [](const CanonicalDiagram& a, const CanonicalDiagram& b) {
                       return a.is_wheel_product() < b.is_wheel_product();
                     });

  std::map<long, std::vector<Relation>> rels_by_degree;
  for (const auto& rel : qb.relations)
    rels_by_degree[rel.begin()->first.degree()].push_back(rel);

  for (const auto& [deg, cols] : cols_by_degree) {
    std::map<CanonicalDiagram, long> col_index;
    for (size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = static_cast<long>(j);
    const auto rels_it = rels_by_degree.find(deg);
    const long nrows = rels_it == rels_by_degree.end()
                           ? 0
                           : static_cast<long>(rels_it->second.size());
    const long ncols = static_cast<long>(cols.size());
    RationalMatrix m = RationalMatrix::Zero(std::max<long>(nrows, 1), ncols);
    for (long i = 0; i < nrows; ++i)
      for (const auto& [d, c] : rels_it->second[i]) m(i, col_index.at(d)) = c;

    // Exact reduced row echelon form.
    long rank = 0;
    std::vector<long> pivot_col;
    for (long j = 0; j < ncols && rank < nrows; ++j) {
      long piv = -1;
      for (long i = rank; i < nrows; ++i)
        if (m(i, j) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      m.row(rank).swap(m.row(piv));
      Rational inv = Rational(1) / Rational(m(rank, j));
      for (long k = j; k < ncols; ++k) m(rank, k) = Rational(m(rank, k)) * inv;
      for (long i = 0; i < nrows; ++i) {
        if (i == rank || m(i, j) == 0) continue;
        Rational f = m(i, j);
        for (long k = j; k < ncols; ++k)
          m(i, k) = Rational(m(i, k)) - f * Rational(m(rank, k));
      }
      pivot_col.push_back(j);
      ++rank;
    }

    std::vector<char> is_pivot(ncols, 0);
    for (long j : pivot_col) is_pivot[j] = 1;
    for (long i = 0; i < rank; ++i) {
      Relation expansion;
      for (long k = 0; k < ncols; ++k)
        if (!is_pivot[k] && m(i, k) != 0) expansion[cols[k]] = -Rational(m(i, k));
      qb.reduction[cols[pivot_col[i]]] = std::move(expansion);
    }
    long dim = 0;
    for (long j = 0; j < ncols; ++j)
      if (!is_pivot[j]) {
        qb.basis.push_back(cols[j]);
        ++dim;
      }
    qb.dim_by_degree[deg] = dim;
  }
  for (long deg = 0; deg <= max_degree; ++deg)
    if (!qb.dim_by_degree.count(deg)) qb.dim_by_degree[deg] = 0;

  std::sort(qb.basis.begin(), qb.basis.end());
  return qb;
}

}  // namespace knotasym
