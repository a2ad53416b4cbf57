#include "knotasym/jacobi.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace knotasym {

namespace {

// The six permutations of {0,1,2}; first three are the cyclic rotations
// (orientation-preserving, sign +1), last three the reflections (sign -1).
constexpr int kPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
constexpr int kPermSign[6] = {1, 1, 1, -1, -1, -1};

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

// Branch-and-bound search for the lexicographically least code of one
// connected component, together with the set of automorphism signs that
// achieve it.
class ComponentCanonicalizer {
 public:
  ComponentCanonicalizer(const RawDiagram& d, std::vector<int> verts)
      : d_(d), verts_(std::move(verts)), n_(static_cast<int>(verts_.size())) {
    pos_of_.assign(d.n_tri, -1);
    he_index_.assign(3 * d.n_tri, -1);
    placed_.reserve(n_);
    cur_.reserve(3 * n_);
  }

  // Returns the minimal code (3n entries) and the achieved signs.
  std::pair<std::vector<int>, std::set<int>> run() {
    rec(/*sign=*/1, /*tight=*/true);
    return {best_, best_signs_};
  }

 private:
  void rec(int sign, bool tight) {
    int i = static_cast<int>(placed_.size());
    if (i == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_signs_ = {sign};
        have_best_ = true;
      } else if (cur_ == best_) {
        best_signs_.insert(sign);
      }
      return;
    }
    for (int v : verts_) {
      if (pos_of_[v] >= 0) continue;
      if (i > 0 && !adjacent_to_placed(v)) continue;
      for (int pi = 0; pi < 6; ++pi) {
        // Place v at position i with slot permutation kPerm[pi].
        pos_of_[v] = i;
        for (int j = 0; j < 3; ++j) he_index_[3 * v + kPerm[pi][j]] = 3 * i + j;
        bool prune = false;
        bool child_tight = tight;
        for (int j = 0; j < 3; ++j) {
          int h = 3 * v + kPerm[pi][j];
          int p = d_.partner[h];
          int entry;
          if (p == kLeg)
            entry = 1;
          else if (he_index_[p] >= 0)
            entry = 4 + he_index_[p];
          else
            entry = 0;
          cur_.push_back(entry);
          if (child_tight && have_best_) {
            int b = best_[cur_.size() - 1];
            if (entry > b) {
              prune = true;
              break;
            }
            if (entry < b) child_tight = false;
          }
        }
        if (!prune) {
          placed_.push_back(v);
          rec(sign * kPermSign[pi], child_tight);
          placed_.pop_back();
        }
        cur_.resize(3 * static_cast<size_t>(i));
        for (int j = 0; j < 3; ++j) he_index_[3 * v + kPerm[pi][j]] = -1;
        pos_of_[v] = -1;
      }
    }
  }

  bool adjacent_to_placed(int v) const {
    for (int j = 0; j < 3; ++j) {
      int p = d_.partner[3 * v + j];
      if (p != kLeg && pos_of_[p / 3] >= 0 && p / 3 != v) return true;
    }
    return false;
  }

  const RawDiagram& d_;
  std::vector<int> verts_;
  int n_;
  std::vector<int> pos_of_;
  std::vector<int> he_index_;
  std::vector<int> placed_;
  std::vector<int> cur_;
  std::vector<int> best_;
  std::set<int> best_signs_;
  bool have_best_ = false;
};

std::vector<int> raw_key(const RawDiagram& d) {
  std::vector<int> k;
  k.reserve(d.partner.size() + 2);
  k.push_back(d.n_tri);
  k.push_back(d.n_struts);
  k.insert(k.end(), d.partner.begin(), d.partner.end());
  return k;
}

}  // namespace

void RawDiagram::validate() const {
  if (n_tri < 0 || n_struts < 0 || partner.size() != static_cast<size_t>(3 * n_tri))
    throw std::invalid_argument("RawDiagram: bad sizes");
  for (int h = 0; h < 3 * n_tri; ++h) {
    int p = partner[h];
    if (p == kLeg) continue;
    if (p < 0 || p >= 3 * n_tri || p == h || partner[p] != h)
      throw std::invalid_argument("RawDiagram: partner map is not an involution");
  }
}

RawDiagram RawDiagram::wheel(int n) {
  if (n < 1) throw std::invalid_argument("wheel: need n >= 1");
  RawDiagram d;
  d.n_tri = n;
  d.partner.assign(3 * n, kLeg);
  for (int i = 0; i < n; ++i) {
    int next = (i + 1) % n;
    d.partner[3 * i + 1] = 3 * next + 0;
    d.partner[3 * next + 0] = 3 * i + 1;
  }
  return d;
}

RawDiagram RawDiagram::theta() {
  RawDiagram d;
  d.n_tri = 2;
  d.partner = {3, 4, 5, 0, 1, 2};
  return d;
}

RawDiagram RawDiagram::disjoint_union(const RawDiagram& a, const RawDiagram& b) {
  RawDiagram d = a;
  d.n_tri += b.n_tri;
  d.n_struts += b.n_struts;
  int off = 3 * a.n_tri;
  for (int p : b.partner) d.partner.push_back(p == kLeg ? kLeg : p + off);
  return d;
}

namespace {

// Canonical code block (the 3n rows, without headers) of the n-wheel.
const std::vector<int>& wheel_block(int n) {
  static std::map<int, std::vector<int>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto c = canonicalize(RawDiagram::wheel(n));
    // code layout: [0 struts, 1 comp, n, rows...]
    std::vector<int> rows(c.diagram.code.begin() + 3, c.diagram.code.end());
    it = cache.emplace(n, std::move(rows)).first;
  }
  return it->second;
}

// Split a canonical code into (n_vertices, rows) component blocks.
std::vector<std::pair<int, std::vector<int>>> split_blocks(const std::vector<int>& code) {
  std::vector<std::pair<int, std::vector<int>>> out;
  size_t i = 2;
  int n_comps = code[1];
  for (int c = 0; c < n_comps; ++c) {
    int nv = code[i++];
    out.emplace_back(nv, std::vector<int>(code.begin() + i, code.begin() + i + 3 * nv));
    i += 3 * nv;
  }
  return out;
}

}  // namespace

bool CanonicalDiagram::is_wheel_product() const {
  if (n_struts != 0) return false;
  for (const auto& [nv, rows] : split_blocks(code))
    if (rows != wheel_block(nv)) return false;
  return true;
}

std::vector<int> CanonicalDiagram::wheel_sizes() const {
  if (!is_wheel_product())
    throw std::domain_error("wheel_sizes: not a product of wheels");
  std::vector<int> sizes;
  for (const auto& [nv, rows] : split_blocks(code)) sizes.push_back(nv);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::string CanonicalDiagram::to_string() const {
  std::ostringstream os;
  os << "deg" << degree() << "[";
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) os << ",";
    os << code[i];
  }
  os << "]";
  return os.str();
}

Canonicalized canonicalize(const RawDiagram& d) {
  static std::map<std::vector<int>, Canonicalized> cache;
  auto key = raw_key(d);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  d.validate();
  UnionFind uf(d.n_tri);
  for (int h = 0; h < 3 * d.n_tri; ++h)
    if (d.partner[h] != kLeg) uf.join(h / 3, d.partner[h] / 3);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < d.n_tri; ++v) comps[uf.find(v)].push_back(v);

  int sign = 1;
  // (n_vertices, code) blocks, sorted for a canonical component order.
  std::vector<std::pair<int, std::vector<int>>> blocks;
  for (auto& [root, verts] : comps) {
    ComponentCanonicalizer cc(d, verts);
    auto [code, signs] = cc.run();
    if (signs.size() == 2)
      sign = 0;  // orientation-odd automorphism: diagram is zero mod AS
    else
      sign *= *signs.begin();
    blocks.emplace_back(static_cast<int>(verts.size()), std::move(code));
  }
  std::sort(blocks.begin(), blocks.end());

  Canonicalized out;
  out.sign = sign;
  out.diagram.n_struts = d.n_struts;
  out.diagram.n_tri = d.n_tri;
  out.diagram.code.push_back(d.n_struts);
  out.diagram.code.push_back(static_cast<int>(blocks.size()));
  int legs = 0;
  for (auto& [nv, code] : blocks) {
    out.diagram.code.push_back(nv);
    for (int e : code) {
      out.diagram.code.push_back(e);
      if (e == 1) ++legs;
    }
  }
  out.diagram.n_legs = legs;
  cache.emplace(std::move(key), out);
  return out;
}

RawDiagram decode(const CanonicalDiagram& d) {
  RawDiagram r;
  size_t i = 0;
  auto next = [&]() { return d.code.at(i++); };
  r.n_struts = next();
  int n_comps = next();
  for (int c = 0; c < n_comps; ++c) {
    int nv = next();
    int base = 3 * r.n_tri;
    r.n_tri += nv;
    r.partner.resize(3 * r.n_tri, -2);
    for (int k = 0; k < 3 * nv; ++k) {
      int e = next();
      if (e == 1)
        r.partner[base + k] = kLeg;
      else if (e >= 4) {
        r.partner[base + k] = base + e - 4;
        r.partner[base + e - 4] = base + k;
      }
      // e == 0: forward reference, resolved by its back-reference above.
    }
  }
  for (int p : r.partner)
    if (p == -2) throw std::invalid_argument("decode: dangling forward reference");
  r.validate();
  return r;
}

void DiagramSum::add(const RawDiagram& d, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto c = canonicalize(d);
  if (c.sign == 0) return;
  if (c.diagram.degree() > max_degree_) return;
  ParamPoly inc = c.sign == 1 ? coeff : -coeff;
  add_canonical(c.diagram, inc);
}

void DiagramSum::add_canonical(const CanonicalDiagram& d, const ParamPoly& coeff) {
  if (coeff.is_zero() || d.degree() > max_degree_) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiagramSum DiagramSum::truncated(long max_degree) const {
  DiagramSum out(max_degree);
  for (const auto& [d, c] : terms_) out.add_canonical(d, c);
  return out;
}

ParamPoly DiagramSum::coefficient(const CanonicalDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? ParamPoly() : it->second;
}

ParamPoly DiagramSum::coefficient(const RawDiagram& d) const {
  auto c = canonicalize(d);
  if (c.sign == 0) return ParamPoly();
  ParamPoly v = coefficient(c.diagram);
  return c.sign == 1 ? v : -v;
}

DiagramSum DiagramSum::diagonal() const {
  DiagramSum out(max_degree_);
  for (const auto& [d, c] : terms_) out.add_canonical(d, c.diagonal());
  return out;
}

DiagramSum DiagramSum::evaluate(const Rational& p, const Rational& q) const {
  DiagramSum out(max_degree_);
  for (const auto& [d, c] : terms_)
    out.add_canonical(d, ParamPoly(c.evaluate(p, q)));
  return out;
}

DiagramSum DiagramSum::degree_scaled(const Rational& scale) const {
  DiagramSum out(max_degree_);
  for (const auto& [d, c] : terms_)
    out.add_canonical(d, rat_pow(scale, d.degree()) * c);
  return out;
}

DiagramSum DiagramSum::degree_shifted(long p_shift_per_degree) const {
  DiagramSum out(max_degree_);
  for (const auto& [d, c] : terms_)
    out.add_canonical(d, c.shifted(p_shift_per_degree * d.degree(), 0));
  return out;
}

DiagramSum DiagramSum::operator+(const DiagramSum& o) const {
  DiagramSum out(std::min(max_degree_, o.max_degree_));
  for (const auto& [d, c] : terms_) out.add_canonical(d, c);
  for (const auto& [d, c] : o.terms_) out.add_canonical(d, c);
  return out;
}

DiagramSum DiagramSum::operator-(const DiagramSum& o) const {
  DiagramSum out(std::min(max_degree_, o.max_degree_));
  for (const auto& [d, c] : terms_) out.add_canonical(d, c);
  for (const auto& [d, c] : o.terms_) out.add_canonical(d, -c);
  return out;
}

DiagramSum DiagramSum::operator*(const ParamPoly& c) const {
  DiagramSum out(max_degree_);
  for (const auto& [d, cc] : terms_) out.add_canonical(d, c * cc);
  return out;
}

namespace {

// Disjoint union of two canonical diagrams, computed directly on codes: the
// canonical code of a union is the struts added and the per-component blocks
// merged in sorted order.  No search needed and no sign: both inputs are
// canonical representatives.
CanonicalDiagram union_canonical(const CanonicalDiagram& a, const CanonicalDiagram& b) {
  auto blocks_of = [](const CanonicalDiagram& d,
                      std::vector<std::pair<int, std::vector<int>>>& out) {
    size_t i = 2;
    int n_comps = d.code[1];
    for (int c = 0; c < n_comps; ++c) {
      int nv = d.code[i++];
      std::vector<int> code(d.code.begin() + i, d.code.begin() + i + 3 * nv);
      i += 3 * nv;
      out.emplace_back(nv, std::move(code));
    }
  };
  std::vector<std::pair<int, std::vector<int>>> blocks;
  blocks_of(a, blocks);
  blocks_of(b, blocks);
  std::sort(blocks.begin(), blocks.end());
  CanonicalDiagram out;
  out.n_struts = a.n_struts + b.n_struts;
  out.n_tri = a.n_tri + b.n_tri;
  out.n_legs = a.n_legs + b.n_legs;
  out.code.push_back(out.n_struts);
  out.code.push_back(static_cast<int>(blocks.size()));
  for (auto& [nv, code] : blocks) {
    out.code.push_back(nv);
    out.code.insert(out.code.end(), code.begin(), code.end());
  }
  return out;
}

}  // namespace

DiagramSum DiagramSum::operator*(const DiagramSum& o) const {
  DiagramSum out(std::min(max_degree_, o.max_degree_));
  for (const auto& [da, ca] : terms_)
    for (const auto& [db, cb] : o.terms_) {
      if (da.degree() + db.degree() > out.max_degree()) continue;
      out.add_canonical(union_canonical(da, db), ca * cb);
    }
  return out;
}

std::string DiagramSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << "  +  ";
    first = false;
    os << "(" << c.to_string() << ") " << d.to_string();
  }
  return os.str();
}

DiagramSum sum_exp(const DiagramSum& a) {
  for (const auto& [d, c] : a.terms())
    if (d.degree() == 0)
      throw std::invalid_argument("sum_exp: argument has a degree-0 term");
  DiagramSum acc(a.max_degree());
  acc.add(RawDiagram::empty(), ParamPoly(Rational(1)));
  DiagramSum pw = acc;
  Rational fact(1);
  for (long k = 1; k <= a.max_degree(); ++k) {
    pw = pw * a;
    if (pw.empty()) break;
    fact *= Rational(k);
    acc = acc + pw * ParamPoly(Rational(1) / fact);
  }
  return acc;
}

DiagramSum sum_inverse(const DiagramSum& a) {
  CanonicalDiagram empty = canonicalize(RawDiagram::empty()).diagram;
  if (a.coefficient(empty) != ParamPoly(Rational(1)))
    throw std::invalid_argument("sum_inverse: constant term must be 1");
  DiagramSum one(a.max_degree());
  one.add_canonical(empty, ParamPoly(Rational(1)));
  DiagramSum n = one - a;  // strictly positive degree
  DiagramSum acc = one;
  DiagramSum pw = one;
  for (long k = 1; k <= a.max_degree(); ++k) {
    pw = pw * n;
    if (pw.empty()) break;
    acc = acc + pw;
  }
  return acc;
}

DiagramSum wheel_sum(const LaurentSeries& f, long max_degree) {
  if (!f.is_zero() && f.valuation() < 2)
    throw std::invalid_argument("wheel_sum: series must start at h^2");
  DiagramSum out(max_degree);
  long top = f.exact() ? std::min<long>(f.order() < 0 ? max_degree : f.order(), max_degree)
                       : std::min(f.order(), max_degree);
  if (f.is_zero()) return out;
  for (long n = std::max<long>(2, f.valuation()); n <= top; ++n) {
    Rational c = f.coeff(n);
    if (c == 0) continue;
    out.add(RawDiagram::wheel(static_cast<int>(n)), ParamPoly(c));
  }
  return out;
}

}  // namespace knotasym
