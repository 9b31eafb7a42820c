#include "hfcontact/openbook.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "strands.hpp"

namespace hf {

namespace {

constexpr long kArcStartSlot = 1000;  // co-core endpoint at the end of its corner
constexpr long kArcEndSlot = 0;       // co-core endpoint at the start of its corner
constexpr long kPushSlot = 1;

}  // namespace

CurvePath cocore_arc(const PageSurface& s, int h) {
  if (h < 0 || h >= s.num_half_edges()) throw InvalidCurveError("half-edge " + std::to_string(h) + " is not on the page");
  return CurvePath::arc({s.prev_ccw(h), kArcStartSlot}, {}, {h, kArcEndSlot});
}

int cocore_half_edge(const PageSurface& s, const CurvePath& a) {
  s.check_path(a);
  if (a.kind != CurveKind::Arc || !a.exits.empty() || s.prev_ccw(a.end.corner) != a.start.corner ||
      s.vertex_of(a.start.corner) != s.vertex_of(a.end.corner))
    throw InvalidCurveError("basis arcs must be co-cores of page edges");
  return a.end.corner;
}

bool validate_basis(const PageSurface& s, const std::vector<CurvePath>& arcs) {
  std::vector<int> edges;
  for (const auto& a : arcs) edges.push_back(cocore_half_edge(s, a) / 2);
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    for (size_t i = 0; i < arcs.size(); ++i)
      for (size_t j = i + 1; j < arcs.size(); ++j)
        if (edges[i] == edges[j] && cocore_half_edge(s, arcs[i]) == cocore_half_edge(s, arcs[j]))
          throw InvalidBasisError("basis arcs " + std::to_string(i) + " and " + std::to_string(j) + " are not disjoint");
    return false;  // parallel copies cut off an annulus
  }
  if (static_cast<int>(arcs.size()) != 1 - s.euler_characteristic()) return false;
  std::vector<bool> tree(s.num_edges(), true);
  for (int e : edges) tree[e] = false;
  try {
    detail::SpineModel m(s, tree);
  } catch (const StructureError&) {
    return false;
  }
  return true;
}

CurvePath push_off(const PageSurface& s, const CurvePath& a) {
  int h = cocore_half_edge(s, a);
  return CurvePath::arc({h, kPushSlot}, {h}, {PageSurface::partner(h), kPushSlot});
}

namespace {

struct FineMap {
  // per dart
  std::vector<int> next;  // face successor
  std::vector<int> face;
  std::vector<bool> aux;
  std::vector<int> tail_node;
  int num_faces = 0;

  int add_edge(bool is_aux) {
    int id = static_cast<int>(aux.size()) / 2;
    for (int k = 0; k < 2; ++k) {
      aux.push_back(is_aux);
      next.push_back(-1);
      face.push_back(-1);
      tail_node.push_back(-1);
    }
    return id;
  }
};

int dart(int edge, bool forward) { return 2 * edge + (forward ? 0 : 1); }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

HeegaardData build_heegaard(const OpenBook& ob) {
  const PageSurface& s = ob.page;
  if (!validate_basis(s, ob.basis)) throw InvalidBasisError("arcs do not cut the page into a disk");
  for (const auto& t : ob.monodromy) {
    try {
      s.check_path(t.curve);
    } catch (const InvalidCurveError& e) {
      throw MismatchError(std::string("monodromy curve is not on the page: ") + e.what());
    }
  }
  const int n = static_cast<int>(ob.basis.size());
  std::vector<int> hh(n);
  std::vector<bool> tree(s.num_edges(), true);
  std::map<int, int> arc_of_side;  // non-tree half-edge -> arc index
  for (int i = 0; i < n; ++i) {
    hh[i] = cocore_half_edge(s, ob.basis[i]);
    tree[hh[i] / 2] = false;
    arc_of_side[hh[i]] = i;
    arc_of_side[PageSurface::partner(hh[i])] = i;
  }
  detail::SpineModel model(s, tree);

  std::vector<CurvePath> bcurves[2];  // [0]: S_0 (monodromy image), [1]: S_{1/2}
  for (int i = 0; i < n; ++i) {
    CurvePath b = push_off(s, ob.basis[i]);
    CurvePath hb = apply_twist(s, ob.monodromy, b);
    if (!(hb.start == b.start) || !(hb.end == b.end)) throw std::logic_error("monodromy moved arc endpoints");
    bcurves[1].push_back(model.contract(b));
    bcurves[0].push_back(model.contract(hb));
  }

  // ---- fine map ----------------------------------------------------------
  FineMap fm;
  int num_nodes = 0;
  auto new_node = [&]() { return num_nodes++; };
  std::vector<int> e1(n), e2(n);  // arc endpoints
  for (int i = 0; i < n; ++i) {
    e1[i] = new_node();
    e2[i] = new_node();
  }
  // beta endpoints, shared by both halves
  std::vector<int> bstart(n), bend(n);
  for (int j = 0; j < n; ++j) {
    bstart[j] = new_node();
    bend[j] = new_node();
  }
  // corners: beta endpoints in slot order
  const auto& order = model.order();
  std::map<int, std::vector<std::pair<long, int>>> corner_pts;  // corner -> (slot, node)
  for (int j = 0; j < n; ++j) {
    corner_pts[bcurves[1][j].start.corner].push_back({bcurves[1][j].start.slot, bstart[j]});
    corner_pts[bcurves[1][j].end.corner].push_back({bcurves[1][j].end.slot, bend[j]});
  }
  for (auto& [c, v] : corner_pts) std::sort(v.begin(), v.end());
  auto side_start = [&](int g) { return g == hh[arc_of_side[g]] ? e1[arc_of_side[g]] : e2[arc_of_side[g]]; };
  auto side_end = [&](int g) { return g == hh[arc_of_side[g]] ? e2[arc_of_side[g]] : e1[arc_of_side[g]]; };
  // aux edges per corner
  std::map<int, std::vector<int>> corner_edges;
  for (int g : order) {
    std::vector<int> nodes{side_end(g)};
    for (auto& [slot, node] : corner_pts[g]) nodes.push_back(node);
    int pos = model.pos(g);
    nodes.push_back(side_start(order[(pos + 1) % order.size()]));
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
      int e = fm.add_edge(true);
      fm.tail_node[dart(e, true)] = nodes[k];
      fm.tail_node[dart(e, false)] = nodes[k + 1];
      corner_edges[g].push_back(e);
    }
  }

  struct HalfData {
    std::vector<std::vector<detail::Point>> pts;  // per arc, forward along a_i
    std::vector<std::vector<int>> pnode;          // per arc
    std::vector<std::vector<int>> aseg;           // per arc, K+1 segments
    std::vector<std::vector<int>> chord;          // per curve, fine edge of each chord
  };
  HalfData half[2];
  std::vector<int> X(n, -1);

  for (int H = 0; H < 2; ++H) {
    detail::StrandSet ss(model, bcurves[H]);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto& hd = half[H];
    hd.pts.resize(n);
    hd.pnode.resize(n);
    hd.aseg.resize(n);
    hd.chord.resize(n);
    std::map<std::pair<int, int>, int> node_of_point;  // (curve, exit index) -> node
    for (int i = 0; i < n; ++i) {
      hd.pts[i] = ss.sorted_points(hh[i], all);
      auto back = ss.sorted_points(PageSurface::partner(hh[i]), all);
      std::reverse(back.begin(), back.end());
      if (!(back == hd.pts[i])) throw std::logic_error("strand order differs on the two copies of an arc");
      std::vector<int> seq{e1[i]};
      for (const auto& p : hd.pts[i]) {
        int v = new_node();
        hd.pnode[i].push_back(v);
        node_of_point[{p.curve, p.index}] = v;
        seq.push_back(v);
      }
      seq.push_back(e2[i]);
      for (size_t k = 0; k + 1 < seq.size(); ++k) {
        int e = fm.add_edge(false);
        fm.tail_node[dart(e, true)] = seq[k];
        fm.tail_node[dart(e, false)] = seq[k + 1];
        hd.aseg[i].push_back(e);
      }
    }
    for (int j = 0; j < n; ++j) {
      const auto& c = bcurves[H][j];
      for (int ch = 0; ch < ss.num_chords(j); ++ch) {
        int e = fm.add_edge(false);
        int from = ch == 0 ? bstart[j] : node_of_point.at({j, ch - 1});
        int to = ch == c.length() ? bend[j] : node_of_point.at({j, ch});
        fm.tail_node[dart(e, true)] = from;
        fm.tail_node[dart(e, false)] = to;
        hd.chord[j].push_back(e);
      }
    }

    // boundary of the polygon, counterclockwise: list of (segment dart, node after it)
    struct Seg {
      int d;
      int node;
    };
    std::vector<Seg> circle;
    for (int g : order) {
      int i = arc_of_side[g];
      const int K = static_cast<int>(hd.aseg[i].size());
      if (g == hh[i]) {
        for (int t = 0; t < K; ++t) circle.push_back({dart(hd.aseg[i][t], true), fm.tail_node[dart(hd.aseg[i][t], false)]});
      } else {
        for (int t = K - 1; t >= 0; --t) circle.push_back({dart(hd.aseg[i][t], false), fm.tail_node[dart(hd.aseg[i][t], true)]});
      }
      for (int e : corner_edges[g]) circle.push_back({dart(e, true), fm.tail_node[dart(e, false)]});
    }
    const int N = static_cast<int>(circle.size());
    // chord attached at each boundary position: position -> (chord dart leaving from here)
    std::vector<int> attach(N, -1);
    std::map<int, std::vector<int>> positions_of_node;
    for (int q = 0; q < N; ++q) positions_of_node[circle[q].node].push_back(q);
    // each point node appears twice on the circle (once per side copy), each
    // beta endpoint node once
    for (int j = 0; j < n; ++j) {
      for (int ch = 0; ch < static_cast<int>(hd.chord[j].size()); ++ch) {
        int e = hd.chord[j][ch];
        detail::Port f = ss.chord_from(j, ch);
        detail::Port t = ss.chord_to(j, ch);
        auto locate = [&](const detail::Port& p, int node) {
          const auto& qs = positions_of_node.at(node);
          if (qs.size() == 1) return qs[0];
          // choose the copy on side p.h
          for (int q : qs) {
            int seg_edge = circle[q].d / 2;
            int i = arc_of_side[p.h];
            bool on_forward_side = p.h == hh[i];
            bool forward_dart = (circle[q].d & 1) == 0;
            if (std::find(hd.aseg[i].begin(), hd.aseg[i].end(), seg_edge) != hd.aseg[i].end() &&
                forward_dart == on_forward_side)
              return q;
          }
          throw std::logic_error("chord endpoint not found on the polygon");
        };
        int qf = locate(f, fm.tail_node[dart(e, true)]);
        int qt = locate(t, fm.tail_node[dart(e, false)]);
        attach[qf] = dart(e, true);
        attach[qt] = dart(e, false);
      }
    }
    std::map<int, int> pos_after_chord;  // chord dart -> circle position where it lands
    for (int q = 0; q < N; ++q)
      if (attach[q] >= 0) pos_after_chord[attach[q] ^ 1] = q;
    std::vector<bool> used(N, false);
    for (int q0 = 0; q0 < N; ++q0) {
      if (used[q0]) continue;
      std::vector<int> cyc;
      int q = q0;
      do {
        used[q] = true;
        cyc.push_back(circle[q].d);
        if (attach[q] >= 0) {
          cyc.push_back(attach[q]);
          q = pos_after_chord.at(attach[q]);
        }
        q = (q + 1) % N;
        if (q != q0 && used[q]) throw std::logic_error("polygon face tracing failed");
      } while (q != q0);
      if (H == 0) {
        std::reverse(cyc.begin(), cyc.end());
        for (auto& x : cyc) x ^= 1;
      }
      for (size_t k = 0; k < cyc.size(); ++k) {
        fm.next[cyc[k]] = cyc[(k + 1) % cyc.size()];
        fm.face[cyc[k]] = fm.num_faces;
      }
      ++fm.num_faces;
    }
    if (H == 1) {
      for (int i = 0; i < n; ++i) {
        if (hd.pts[i].size() != 1 || hd.pts[i][0].curve != i)
          throw std::logic_error("push-off does not meet its arc exactly once");
      }
    }
  }
  const int FD = static_cast<int>(fm.next.size());
  for (int x = 0; x < FD; ++x)
    if (fm.next[x] < 0) throw std::logic_error("fine dart without a face");

  // ---- coarse diagram ----------------------------------------------------
  std::vector<int> vertex_of_node(num_nodes, -1);
  HeegaardDiagram d;
  d.num_curves = n;
  for (int i = 0; i < n; ++i)
    for (int H : {1, 0}) {
      auto& hd = half[H];
      std::vector<int> idx(hd.pnode[i].size());
      std::iota(idx.begin(), idx.end(), 0);
      if (H == 0) std::reverse(idx.begin(), idx.end());
      for (int t : idx) {
        vertex_of_node[hd.pnode[i][t]] = static_cast<int>(d.vertices.size());
        d.vertices.push_back({i, hd.pts[i][t].curve, H});
      }
    }
  for (int i = 0; i < n; ++i) X[i] = vertex_of_node[half[1].pnode[i][0]];

  std::vector<int> coarse_of_fine(FD, -1);  // fine dart -> coarse dart it starts
  std::vector<int> last_fine(0);
  auto add_curve = [&](Family fam, int c, const std::vector<int>& fine) {
    // rotate to start at a vertex
    int start = -1;
    for (size_t k = 0; k < fine.size(); ++k)
      if (vertex_of_node[fm.tail_node[fine[k]]] >= 0) {
        start = static_cast<int>(k);
        break;
      }
    if (start < 0) throw std::logic_error(std::string(family_name(fam)) + " curve without intersections");
    std::vector<int> f(fine.begin() + start, fine.end());
    f.insert(f.end(), fine.begin(), fine.begin() + start);
    size_t k = 0;
    while (k < f.size()) {
      size_t l = k + 1;
      while (l < f.size() && vertex_of_node[fm.tail_node[f[l]]] < 0) ++l;
      int e = static_cast<int>(d.edges.size());
      int head_node = l < f.size() ? fm.tail_node[f[l]] : fm.tail_node[f[0]];
      d.edges.push_back({fam, c, vertex_of_node[fm.tail_node[f[k]]], vertex_of_node[head_node]});
      coarse_of_fine[f[k]] = 2 * e;
      coarse_of_fine[f[l - 1] ^ 1] = 2 * e + 1;
      last_fine.push_back(f[l - 1]);
      last_fine.push_back(f[k] ^ 1);
      k = l;
    }
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> fine;
    for (int e : half[1].aseg[i]) fine.push_back(dart(e, true));
    for (int t = static_cast<int>(half[0].aseg[i].size()) - 1; t >= 0; --t) fine.push_back(dart(half[0].aseg[i][t], false));
    add_curve(Family::Alpha, i, fine);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> fine;
    for (int e : half[1].chord[j]) fine.push_back(dart(e, true));
    for (int t = static_cast<int>(half[0].chord[j].size()) - 1; t >= 0; --t) fine.push_back(dart(half[0].chord[j][t], false));
    add_curve(Family::Beta, j, fine);
  }

  // regions: fine faces merged across boundary pieces of the page
  UnionFind uf(fm.num_faces);
  std::vector<int> aux_count(fm.num_faces, 0);
  for (int x = 0; x < FD; x += 2)
    if (fm.aux[x]) uf.unite(fm.face[x], fm.face[x + 1]);
  std::map<int, int> faces_in, aux_in;
  for (int f = 0; f < fm.num_faces; ++f) ++faces_in[uf.find(f)];
  for (int x = 0; x < FD; x += 2)
    if (fm.aux[x]) ++aux_in[uf.find(fm.face[x])];

  const int CD = d.num_darts();
  std::vector<int> cnext(CD, -1);
  for (int D = 0; D < CD; ++D) {
    int y = fm.next[last_fine[D]];
    while (fm.aux[y]) y = fm.next[y ^ 1];
    cnext[D] = coarse_of_fine.at(y);
    if (cnext[D] < 0) throw std::logic_error("region boundary walk left the curves");
  }
  std::vector<int> first_fine(CD, -1);
  for (int x = 0; x < FD; ++x)
    if (coarse_of_fine[x] >= 0) first_fine[coarse_of_fine[x]] = x;
  std::map<int, int> region_of_root;
  std::vector<bool> seen(CD, false);
  for (int D = 0; D < CD; ++D) {
    if (seen[D]) continue;
    std::vector<int> cyc;
    int y = D;
    do {
      seen[y] = true;
      cyc.push_back(y);
      y = cnext[y];
    } while (y != D);
    int root = uf.find(fm.face[first_fine[D]]);
    auto it = region_of_root.find(root);
    if (it == region_of_root.end()) {
      it = region_of_root.emplace(root, static_cast<int>(d.regions.size())).first;
      d.regions.emplace_back();
    }
    d.regions[it->second].boundary.push_back(std::move(cyc));
  }
  for (auto& [root, r] : region_of_root) {
    int chi = faces_in[root] - aux_in[root];
    int c = static_cast<int>(d.regions[r].boundary.size());
    if ((2 - chi - c) % 2 != 0 || 2 - chi - c < 0) throw std::logic_error("region with inconsistent topology");
    d.regions[r].genus = (2 - chi - c) / 2;
  }
  // every fine face must have reached a region (faces touching no curve cannot occur)
  int zroot = uf.find(fm.face[dart(half[1].aseg[0][0], true)]);
  for (int i = 0; i < n; ++i)
    if (uf.find(fm.face[dart(half[1].aseg[i][0], true)]) != zroot)
      throw std::logic_error("basepoint polygon is not a single region");
  d.basepoint = region_of_root.at(zroot);
  d = canonicalize_regions(std::move(d));
  auto rep = check(d);
  if (!rep.ok()) throw std::logic_error("constructed diagram is invalid: " + rep.problems[0]);
  return {std::move(d), {X}};
}

}  // namespace hf
