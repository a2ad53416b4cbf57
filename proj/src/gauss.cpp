#include "knotasym/gauss.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace knotasym {

void GaussDiagram::validate() const {
  const int m = 2 * n();
  std::vector<char> seen(m, 0);
  for (const auto& a : arrows) {
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("gauss: sign must be +-1");
    for (int e : {a.tail, a.head}) {
      if (e < 0 || e >= m || seen[e]) throw std::invalid_argument("gauss: bad endpoints");
      seen[e] = 1;
    }
  }
}

GaussDiagram braid_closure_to_gauss(const BraidWord& w) {
  const int s = w.strands;
  if (s < 1) throw std::invalid_argument("braid: strands >= 1");
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= s) throw std::invalid_argument("braid: bad letter");

  // closure must be a knot: the braid permutation is a single s-cycle
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
  {
    int col = 0, len = 0;
    do {
      // column j at the bottom reattaches to column j at the top; the strand
      // entering top column j exits at bottom column perm^{-1}... walk via
      // forward permutation of positions
      int next = (int)(std::find(perm.begin(), perm.end(), col) - perm.begin());
      col = next;
      ++len;
    } while (col != 0);
    if (len != s) throw std::invalid_argument("braid closure has several components");
  }

  // walk the knot: start at the top of column 0, record passages in order
  struct Passage {
    int letter;
    bool over;
  };
  std::vector<Passage> walk;
  int col = 0;
  do {
    for (size_t i = 0; i < w.letters.size(); ++i) {
      int l = w.letters[i];
      int a = std::abs(l) - 1;  // crossing involves columns a, a+1
      if (col == a) {
        walk.push_back({(int)i, l > 0});
        col = a + 1;
      } else if (col == a + 1) {
        walk.push_back({(int)i, l < 0});
        col = a;
      }
    }
    // closure arc: bottom of `col` to top of `col`
  } while (col != 0);

  if (walk.size() != 2 * w.letters.size())
    throw std::logic_error("braid walk did not visit every crossing twice");

  const int nc = (int)w.letters.size();
  std::vector<int> over_pos(nc, -1), under_pos(nc, -1);
  for (int pos = 0; pos < (int)walk.size(); ++pos) {
    if (walk[pos].over)
      over_pos[walk[pos].letter] = pos;
    else
      under_pos[walk[pos].letter] = pos;
  }
  GaussDiagram g;
  g.arrows.reserve(nc);
  for (int i = 0; i < nc; ++i)
    g.arrows.push_back({under_pos[i], over_pos[i], w.letters[i] > 0 ? 1 : -1});
  g.validate();
  return g;
}

BraidWord torus_braid_word(long p, long q) {
  if (p < 1 || q < 0) throw std::invalid_argument("torus braid: p >= 1, q >= 0");
  BraidWord w;
  w.strands = (int)p;
  for (long r = 0; r < q; ++r)
    for (long i = 1; i < p; ++i) w.letters.push_back((int)i);
  return w;
}

GaussDiagram torus_knot_diagram(long p, long q) {
  if (p == 1 || q == 0) {
    if (p != 1 && q == 0) throw std::invalid_argument("torus knot: q=0 needs p=1");
    return GaussDiagram{};
  }
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), Integer((long)p).get_mpz_t(), (unsigned long)q);
  if (g != 1) throw std::invalid_argument("torus knot: p,q must be coprime");
  return braid_closure_to_gauss(torus_braid_word(p, q));
}

namespace {

// rank pattern of a set of arrows: endpoints sorted, each arrow mapped to
// (tail rank, head rank), arrows ordered by their smaller rank
using Pattern = std::vector<int>;

Pattern pattern_of(const std::vector<Arrow>& arrows) {
  std::vector<int> pts;
  pts.reserve(arrows.size() * 2);
  for (const auto& a : arrows) {
    pts.push_back(a.tail);
    pts.push_back(a.head);
  }
  std::sort(pts.begin(), pts.end());
  auto rank = [&](int e) {
    return (int)(std::lower_bound(pts.begin(), pts.end(), e) - pts.begin());
  };
  std::vector<std::array<int, 2>> ra;
  ra.reserve(arrows.size());
  for (const auto& a : arrows) ra.push_back({rank(a.tail), rank(a.head)});
  std::sort(ra.begin(), ra.end(),
            [](const auto& x, const auto& y) { return std::min(x[0], x[1]) < std::min(y[0], y[1]); });
  Pattern p;
  p.reserve(arrows.size() * 2);
  for (const auto& a : ra) {
    p.push_back(a[0]);
    p.push_back(a[1]);
  }
  return p;
}

}  // namespace

Integer pairing(const GaussDiagram& gamma, const GaussDiagram& g) {
  const int n = gamma.n();
  int gamma_sign = 1;
  for (const auto& a : gamma.arrows) gamma_sign *= a.sign;
  if (n == 0) return gamma_sign;
  if (n > (int)g.arrows.size()) return 0;
  const Pattern target = pattern_of(gamma.arrows);
  Integer acc(0);
  const auto& ar = g.arrows;
  const int c = (int)ar.size();
  if (n == 1) {
    for (int i = 0; i < c; ++i)
      if (pattern_of({ar[i]}) == target) acc += ar[i].sign;
  } else if (n == 2) {
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        if (pattern_of({ar[i], ar[j]}) == target) acc += ar[i].sign * ar[j].sign;
  } else if (n == 3) {
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        for (int k = j + 1; k < c; ++k)
          if (pattern_of({ar[i], ar[j], ar[k]}) == target)
            acc += ar[i].sign * ar[j].sign * ar[k].sign;
  } else {
    // backtracking over index combinations
    std::vector<int> idx(n);
    std::vector<Arrow> sub(n);
    auto rec = [&](auto&& self, int depth, int start) -> void {
      if (depth == n) {
        if (pattern_of(sub) == target) {
          int s = 1;
          for (const auto& a : sub) s *= a.sign;
          acc += s;
        }
        return;
      }
      for (int i = start; i <= c - (n - depth); ++i) {
        sub[depth] = ar[i];
        self(self, depth + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return acc * gamma_sign;
}

// Two crossing arrows read from the base point: endpoints {0,2} and {1,3},
// the first arrow runs 2 -> 0, the second 1 -> 3.  This orientation gives
// casson(trefoil) = +1 and matches the quadratic torus-knot form on the
// cross-oracle sweep.
const GaussDiagram kCassonDiagram{{{2, 0, 1}, {1, 3, 1}}};

Integer casson(const GaussDiagram& g) { return pairing(kCassonDiagram, g); }

const GaussDiagram kArrowForward{{{0, 1, 1}}};
const GaussDiagram kArrowBackward{{{1, 0, 1}}};

nlohmann::json to_json(const GaussDiagram& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : g.arrows)
    arr.push_back({{"tail", a.tail}, {"head", a.head}, {"sign", a.sign}});
  return nlohmann::json{{"arrows", arr}};
}

GaussDiagram gauss_from_json(const nlohmann::json& j) {
  GaussDiagram g;
  for (const auto& a : j.at("arrows"))
    g.arrows.push_back({a.at("tail").get<int>(), a.at("head").get<int>(), a.at("sign").get<int>()});
  g.validate();
  return g;
}

}  // namespace knotasym
