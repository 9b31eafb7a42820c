#include "hfcontact/floer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hf {

namespace {

using linalg::Mat;
using linalg::Vec;

// A corner is a source corner when the boundary, traversed with the domain
// on its left, leaves the corner along this family.
constexpr Family kSourceLeaves = Family::Beta;

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Darts of each curve in order along it.
struct CurveWalks {
  std::vector<std::vector<int>> edges[2];  // [family][curve] -> edge ids in order

  explicit CurveWalks(const HeegaardDiagram& d) {
    for (int f = 0; f < 2; ++f) edges[f].resize(d.num_curves);
    std::vector<std::vector<int>> out(d.vertices.size() * 2);  // (vertex, family) -> edge leaving
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
      out[2 * d.edges[e].tail + static_cast<int>(d.edges[e].family)].push_back(e);
    std::vector<bool> seen(d.edges.size(), false);
    for (int e0 = 0; e0 < static_cast<int>(d.edges.size()); ++e0) {
      if (seen[e0]) continue;
      const auto& E = d.edges[e0];
      auto& list = edges[static_cast<int>(E.family)][E.curve];
      if (!list.empty()) continue;
      int e = e0;
      do {
        seen[e] = true;
        list.push_back(e);
        int nxt = -1;
        for (int c : out[2 * d.edges[e].head + static_cast<int>(E.family)])
          if (d.edges[c].curve == E.curve) nxt = c;
        if (nxt < 0) throw PreconditionError("curve does not close up");
        e = nxt;
      } while (e != e0);
    }
  }

  // Darts from vertex p to vertex q along the curve, forward or backward.
  std::vector<int> arc(const HeegaardDiagram& d, Family f, int c, int p, int q, bool forward) const {
    const auto& list = edges[static_cast<int>(f)][c];
    const int L = static_cast<int>(list.size());
    int start = -1;
    for (int k = 0; k < L; ++k)
      if ((forward ? d.edges[list[k]].tail : d.edges[list[k]].head) == p) start = k;
    if (start < 0) return {};
    std::vector<int> out;
    for (int s = 0; s < L; ++s) {
      int k = forward ? (start + s) % L : ((start - s) % L + L) % L;
      out.push_back(forward ? 2 * list[k] : 2 * list[k] + 1);
      if (d.head(out.back()) == q) return out;
    }
    return {};
  }
};

// Region coefficients with the given boundary, or nothing if it bounds nothing.
std::optional<std::vector<int>> flood(const DiagramIndex& idx, const std::vector<int>& chain) {
  const auto& d = idx.diagram();
  const int R = static_cast<int>(d.regions.size());
  std::vector<std::vector<std::pair<int, int>>> adj(R);  // (neighbour, n[self] - n[neighbour])
  for (int x = 0; x < d.num_darts(); ++x) {
    int c = chain[x] - chain[HeegaardDiagram::twin(x)];
    adj[idx.left_region(x)].push_back({idx.left_region(HeegaardDiagram::twin(x)), c});
  }
  std::vector<std::optional<int>> n(R);
  n[d.basepoint] = 0;
  std::vector<int> stack{d.basepoint};
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (auto [s, c] : adj[r]) {
      int want = *n[r] - c;
      if (!n[s]) {
        n[s] = want;
        stack.push_back(s);
      } else if (*n[s] != want) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> out(R);
  for (int r = 0; r < R; ++r) {
    if (!n[r]) return std::nullopt;
    out[r] = *n[r];
  }
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<int> RegionDomain::support() const {
  std::vector<int> s;
  for (int r = 0; r < static_cast<int>(coefficients.size()); ++r)
    if (coefficients[r] != 0) s.push_back(r);
  return s;
}

int GF2ChainComplex::index_of(const Generator& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::vector<Generator> enumerate_generators(const HeegaardDiagram& d) {
  const int n = d.num_curves;
  std::vector<std::vector<int>> on_alpha(n);
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) on_alpha[d.vertices[v].alpha].push_back(v);
  std::vector<Generator> out;
  Generator cur;
  cur.points.assign(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v : on_alpha[i]) {
      int b = d.vertices[v].beta;
      if (used[b]) continue;
      used[b] = true;
      cur.points[i] = v;
      self(self, i + 1);
      used[b] = false;
    }
  };
  if (n > 0) rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PolygonShape> polygon_shape(const DiagramIndex& idx, const std::vector<int>& coef) {
  const auto& d = idx.diagram();
  const int R = static_cast<int>(d.regions.size());
  if (static_cast<int>(coef.size()) != R) throw PreconditionError("domain has the wrong number of regions");
  int count = 0;
  for (int r = 0; r < R; ++r) {
    if (coef[r] != 0 && coef[r] != 1) return std::nullopt;
    if (coef[r] == 1) {
      ++count;
      if (d.regions[r].genus != 0 || d.regions[r].boundary.size() != 1) return std::nullopt;
    }
  }
  if (count == 0 || coef[d.basepoint] != 0) return std::nullopt;

  PolygonShape shape;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    const auto& rot = idx.rotation(v);
    int s[4];
    int k1 = 0;
    for (int k = 0; k < 4; ++k) {
      s[k] = coef[idx.left_region(rot[k])];
      k1 += s[k];
    }
    if (k1 == 0) continue;
    if (k1 == 4) {
      shape.interior.push_back(v);
      continue;
    }
    if (k1 == 3) return std::nullopt;
    if (k1 == 2) {
      if (s[0] == s[2]) return std::nullopt;  // opposite sectors: pinch point
      continue;
    }
    int k = static_cast<int>(std::find(s, s + 4, 1) - s);
    if (d.family(rot[k]) == kSourceLeaves)
      shape.source_corners.push_back(v);
    else
      shape.target_corners.push_back(v);
  }
  // connected, Euler characteristic one
  UnionFind uf(R);
  int interior_edges = 0;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    int a = idx.left_region(2 * e), b = idx.left_region(2 * e + 1);
    if (coef[a] && coef[b]) {
      ++interior_edges;
      uf.unite(a, b);
    }
  }
  int root = -1;
  for (int r = 0; r < R; ++r)
    if (coef[r]) {
      if (root < 0) root = uf.find(r);
      if (uf.find(r) != root) return std::nullopt;
    }
  int chi = count - interior_edges + static_cast<int>(shape.interior.size());
  if (chi != 1) return std::nullopt;
  return shape;
}

bool is_empty_polygon(const DiagramIndex& idx, const std::vector<int>& coef, const Generator& from,
                      const Generator& to) {
  auto shape = polygon_shape(idx, coef);
  if (!shape) return false;
  std::vector<int> src, dst;
  std::set<int> fixed;
  for (size_t i = 0; i < from.points.size(); ++i) {
    if (from.points[i] != to.points[i]) {
      src.push_back(from.points[i]);
      dst.push_back(to.points[i]);
    } else {
      fixed.insert(from.points[i]);
    }
  }
  if (src.empty() || src.size() > 2) return false;
  if (sorted(src) != sorted(shape->source_corners) || sorted(dst) != sorted(shape->target_corners)) return false;
  for (int v : shape->interior)
    if (fixed.count(v) || std::count(src.begin(), src.end(), v) || std::count(dst.begin(), dst.end(), v)) return false;
  return true;
}

std::vector<RegionDomain> find_polygons(const HeegaardDiagram& d, const Generator& from, const Generator& to) {
  if (!is_nice(d)) throw PreconditionError("polygon counting needs a nice diagram");
  DiagramIndex idx(d);
  CurveWalks walks(d);
  std::vector<int> moving;
  for (int i = 0; i < d.num_curves; ++i)
    if (from.points[i] != to.points[i]) moving.push_back(i);
  std::vector<RegionDomain> out;
  if (moving.empty() || moving.size() > 2) return out;

  // outline pieces: alpha arcs run from target corner to source corner,
  // beta arcs from source corner to the target corner on the same beta curve
  struct Piece {
    Family f;
    int curve, p, q;
  };
  std::vector<Piece> pieces;
  for (int i : moving) pieces.push_back({Family::Alpha, i, to.points[i], from.points[i]});
  for (int i : moving) {
    int b = d.vertices[from.points[i]].beta;
    int q = -1;
    for (int k : moving)
      if (d.vertices[to.points[k]].beta == b) q = to.points[k];
    if (q < 0) return out;
    pieces.push_back({Family::Beta, b, from.points[i], q});
  }
  const int P = static_cast<int>(pieces.size());
  std::set<std::vector<int>> seen;
  for (int mask = 0; mask < (1 << P); ++mask) {
    std::vector<int> chain(d.num_darts(), 0);
    bool ok = true;
    for (int k = 0; k < P && ok; ++k) {
      auto arc = walks.arc(d, pieces[k].f, pieces[k].curve, pieces[k].p, pieces[k].q, (mask >> k) & 1);
      if (arc.empty()) ok = false;
      for (int x : arc) ++chain[x];
    }
    if (!ok) continue;
    auto coef = flood(idx, chain);
    if (!coef || !seen.insert(*coef).second) continue;
    if (is_empty_polygon(idx, *coef, from, to)) out.push_back({*coef, -1, -1});
  }
  std::sort(out.begin(), out.end(), [](const RegionDomain& a, const RegionDomain& b) { return a.support() < b.support(); });
  return out;
}

namespace {

// Embedded polygons of the diagram with their shapes, by exhaustive search.
std::vector<std::pair<std::vector<int>, PolygonShape>> all_polygons(const HeegaardDiagram& d, int region_bound) {
  DiagramIndex idx(d);
  const int R = static_cast<int>(d.regions.size());
  std::vector<int> free;
  for (int r = 0; r < R; ++r)
    if (r != d.basepoint) free.push_back(r);
  const int F = static_cast<int>(free.size());
  if (F > region_bound)
    throw OracleUnavailableError(std::to_string(F) + " regions exceed the oracle bound of " + std::to_string(region_bound));
  std::vector<std::pair<std::vector<int>, PolygonShape>> out;
  std::vector<int> coef(R, 0);
  for (long mask = 1; mask < (1L << F); ++mask) {
    for (int k = 0; k < F; ++k) coef[free[k]] = (mask >> k) & 1;
    auto shape = polygon_shape(idx, coef);
    if (!shape) continue;
    size_t m = shape->source_corners.size();
    if (m < 1 || m > 2 || shape->target_corners.size() != m) continue;
    out.push_back({coef, *shape});
  }
  return out;
}

}  // namespace

std::vector<RegionDomain> polygon_oracle(const HeegaardDiagram& d, const Generator& from, const Generator& to,
                                         int region_bound) {
  DiagramIndex idx(d);
  std::vector<RegionDomain> out;
  for (const auto& [coef, shape] : all_polygons(d, region_bound))
    if (is_empty_polygon(idx, coef, from, to)) out.push_back({coef, -1, -1});
  std::sort(out.begin(), out.end(), [](const RegionDomain& a, const RegionDomain& b) { return a.support() < b.support(); });
  return out;
}

GF2ChainComplex differential(const HeegaardDiagram& d, std::vector<Generator> gens, PolygonSearch search,
                             int region_bound) {
  if (!is_nice(d)) throw PreconditionError("the differential is only counted on nice diagrams");
  GF2ChainComplex c;
  c.generators = std::move(gens);
  const int N = c.size();
  c.boundary = Mat<GF2>::Zero(N, N);
  auto differ = [&](int a, int b) {
    int k = 0;
    for (int i = 0; i < d.num_curves; ++i) k += c.generators[a].points[i] != c.generators[b].points[i];
    return k;
  };
  auto record = [&](int a, int b, std::vector<RegionDomain> doms) {
    if (doms.empty()) return;
    for (auto& x : doms) {
      x.from = a;
      x.to = b;
    }
    c.boundary(b, a) = GF2(static_cast<int>(doms.size()));
    c.witnesses[{a, b}] = std::move(doms);
  };
  if (search == PolygonSearch::Outline) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int k = differ(a, b);
        if (k < 1 || k > 2) continue;
        record(a, b, find_polygons(d, c.generators[a], c.generators[b]));
      }
  } else {
    DiagramIndex idx(d);
    auto polys = all_polygons(d, region_bound);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int k = differ(a, b);
        if (k < 1 || k > 2) continue;
        std::vector<RegionDomain> doms;
        for (const auto& [coef, shape] : polys)
          if (is_empty_polygon(idx, coef, c.generators[a], c.generators[b])) doms.push_back({coef, -1, -1});
        std::sort(doms.begin(), doms.end(),
                  [](const RegionDomain& x, const RegionDomain& y) { return x.support() < y.support(); });
        record(a, b, std::move(doms));
      }
  }
  Mat<GF2> sq = c.boundary * c.boundary;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (sq(i, j) == GF2(1))
        throw ConsistencyError("the differential does not square to zero (generator " + std::to_string(j) + " to " +
                               std::to_string(i) + ")");
  return c;
}

Homology homology(const GF2ChainComplex& c) {
  std::vector<int> all(c.size());
  std::iota(all.begin(), all.end(), 0);
  return homology(c, all);
}

Homology homology(const GF2ChainComplex& c, const std::vector<int>& block) {
  const int B = static_cast<int>(block.size());
  Mat<GF2> A(B, B);
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j) A(i, j) = c.boundary(block[i], block[j]);
  for (int j = 0; j < B; ++j)
    for (int i = 0; i < c.size(); ++i)
      if (c.boundary(i, block[j]) == GF2(1) && std::find(block.begin(), block.end(), i) == block.end())
        throw PreconditionError("block is not closed under the differential");
  Homology h;
  h.rank = linalg::rank(A);
  Mat<GF2> K = linalg::kernel_basis(A);
  h.kernel = static_cast<int>(K.cols());
  h.dimension = h.kernel - h.rank;
  // extend a basis of the image by kernel vectors
  Mat<GF2> acc = A;
  int r = h.rank;
  for (int k = 0; k < K.cols(); ++k) {
    Mat<GF2> trial(B, acc.cols() + 1);
    trial << acc, K.col(k);
    int nr = linalg::rank(trial);
    if (nr > r) {
      acc = trial;
      r = nr;
      std::vector<int> rep;
      for (int i = 0; i < B; ++i)
        if (K(i, k) == GF2(1)) rep.push_back(block[i]);
      h.representatives.push_back(rep);
    }
  }
  return h;
}

ContactStatus contact_class_status(const GF2ChainComplex& c, int x) {
  const int N = c.size();
  if (x < 0 || x >= N) throw PreconditionError("contact generator is not in the complex");
  for (int i = 0; i < N; ++i)
    if (c.boundary(i, x) == GF2(1)) throw PreconditionError("the contact generator is not a cycle");
  Vec<GF2> b = Vec<GF2>::Zero(N);
  b(x) = GF2(1);
  ContactStatus st;
  for (int g = 0; g < N; ++g)
    if (c.boundary.col(g) == b) {
      st.primitive = {g};
      return st;
    }
  auto res = linalg::solve(c.boundary, b);
  if (res.solution) {
    st.nonzero = false;
    for (int i = 0; i < N; ++i)
      if ((*res.solution)(i) == GF2(1)) st.primitive.push_back(i);
  } else {
    st.nonzero = true;
    for (int i = 0; i < N; ++i)
      if (res.obstruction(i) == GF2(1)) st.functional.push_back(i);
  }
  return st;
}

}  // namespace hf
