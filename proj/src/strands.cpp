#include "strands.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hf::detail {

SpineModel::SpineModel(const PageSurface& s, std::vector<bool> tree_edges)
    : surface_(&s), tree_(std::move(tree_edges)) {
  const int V = s.num_vertices();
  const int H = s.num_half_edges();
  if (static_cast<int>(tree_.size()) != s.num_edges()) throw StructureError("spanning tree flags size mismatch");

  parent_half_.assign(V, -1);
  depth_.assign(V, -1);
  if (V > 0) {
    std::queue<int> q;
    q.push(0);
    depth_[0] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int h : s.rotations()[v]) {
        if (!tree_[h / 2]) continue;
        int w = s.vertex_of(PageSurface::partner(h));
        if (depth_[w] >= 0) continue;
        depth_[w] = depth_[v] + 1;
        parent_half_[w] = h;
        q.push(w);
      }
    }
  }
  int tree_count = static_cast<int>(std::count(tree_.begin(), tree_.end(), true));
  for (int v = 0; v < V; ++v)
    if (depth_[v] < 0) throw StructureError("collapsed edges do not span the page");
  if (tree_count != V - 1) throw StructureError("collapsed edges contain a cycle");

  pos_.assign(H, -1);
  corner_to_.assign(H, -1);
  corner_rank_.assign(H, 0);
  int h0 = -1;
  for (int h = 0; h < H; ++h)
    if (!tree_[h / 2]) {
      h0 = h;
      break;
    }
  if (h0 < 0) return;
  int cur = h0;
  int last = -1;
  long rank = 0;
  for (int step = 0; step < H; ++step) {
    if (tree_[cur / 2]) {
      int p = PageSurface::partner(cur);
      corner_to_[p] = last;
      corner_rank_[p] = ++rank;
      cur = s.next_ccw(p);
    } else {
      pos_[cur] = static_cast<int>(order_.size());
      order_.push_back(cur);
      last = cur;
      rank = 0;
      corner_to_[cur] = last;
      corner_rank_[cur] = 0;
      cur = s.next_ccw(cur);
    }
  }
  if (cur != h0) throw StructureError("spine tour did not close up");
}

SpineModel SpineModel::bfs(const PageSurface& s) {
  std::vector<bool> tree(s.num_edges(), false);
  std::vector<bool> seen(s.num_vertices(), false);
  if (s.num_vertices() == 0) return SpineModel(s, tree);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int h : s.rotations()[v]) {
      int w = s.vertex_of(PageSurface::partner(h));
      if (seen[w]) continue;
      seen[w] = true;
      tree[h / 2] = true;
      q.push(w);
    }
  }
  return SpineModel(s, tree);
}

Endpoint SpineModel::contract(const Endpoint& e) const {
  if (corner_to_[e.corner] < 0) throw StructureError("corner has no image on the spine");
  return {corner_to_[e.corner], corner_rank_[e.corner] * kSlotShift + e.slot};
}

Endpoint SpineModel::expand(const Endpoint& e) const {
  long rank = e.slot >= 0 ? e.slot / kSlotShift : -((-e.slot + kSlotShift - 1) / kSlotShift);
  for (int g = 0; g < static_cast<int>(corner_to_.size()); ++g)
    if (corner_to_[g] == e.corner && corner_rank_[g] == rank) return {g, e.slot - rank * kSlotShift};
  // Slots beyond the last merged corner stay with the last one.
  int best = -1;
  long best_rank = -1;
  for (int g = 0; g < static_cast<int>(corner_to_.size()); ++g)
    if (corner_to_[g] == e.corner && corner_rank_[g] <= rank && corner_rank_[g] > best_rank) {
      best = g;
      best_rank = corner_rank_[g];
    }
  if (best < 0) throw StructureError("cannot expand endpoint");
  return {best, e.slot - best_rank * kSlotShift};
}

CurvePath SpineModel::contract(const CurvePath& p) const {
  CurvePath out;
  out.kind = p.kind;
  for (int x : p.exits)
    if (!tree_[x / 2]) out.exits.push_back(x);
  if (p.kind == CurveKind::Arc) {
    out.start = contract(p.start);
    out.end = contract(p.end);
  }
  return out;
}

std::vector<int> SpineModel::tree_path(int from, int to) const {
  std::vector<int> up;
  std::vector<int> down;
  int a = from;
  int b = to;
  while (depth_[a] > depth_[b]) {
    up.push_back(PageSurface::partner(parent_half_[a]));
    a = surface_->vertex_of(parent_half_[a]);
  }
  while (depth_[b] > depth_[a]) {
    down.push_back(parent_half_[b]);
    b = surface_->vertex_of(parent_half_[b]);
  }
  while (a != b) {
    up.push_back(PageSurface::partner(parent_half_[a]));
    a = surface_->vertex_of(parent_half_[a]);
    down.push_back(parent_half_[b]);
    b = surface_->vertex_of(parent_half_[b]);
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

CurvePath SpineModel::expand(const CurvePath& p) const {
  const PageSurface& s = *surface_;
  CurvePath out;
  out.kind = p.kind;
  if (p.kind == CurveKind::Arc) {
    out.start = expand(p.start);
    out.end = expand(p.end);
    int cur = s.vertex_of(out.start.corner);
    for (int x : p.exits) {
      auto path = tree_path(cur, s.vertex_of(x));
      out.exits.insert(out.exits.end(), path.begin(), path.end());
      out.exits.push_back(x);
      cur = s.vertex_of(PageSurface::partner(x));
    }
    auto path = tree_path(cur, s.vertex_of(out.end.corner));
    out.exits.insert(out.exits.end(), path.begin(), path.end());
  } else if (!p.exits.empty()) {
    int cur = s.vertex_of(PageSurface::partner(p.exits.back()));
    for (int x : p.exits) {
      auto path = tree_path(cur, s.vertex_of(x));
      out.exits.insert(out.exits.end(), path.begin(), path.end());
      out.exits.push_back(x);
      cur = s.vertex_of(PageSurface::partner(x));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

StrandSet::StrandSet(const SpineModel& m, std::vector<CurvePath> curves) : model_(m), curves_(std::move(curves)) {}

int StrandSet::num_chords(int c) const {
  const auto& p = curves_[c];
  return p.kind == CurveKind::Arc ? p.length() + 1 : p.length();
}

Port StrandSet::side_port(int h) const { return {false, h, 0, 2 * model_.pos(h)}; }

Port StrandSet::corner_port(const Endpoint& e) const { return {true, e.corner, e.slot, 2 * model_.pos(e.corner) + 1}; }

Port StrandSet::chord_from(int c, int j) const {
  const auto& p = curves_[c];
  const int m = p.length();
  if (p.kind == CurveKind::Arc) {
    if (j == 0) return corner_port(p.start);
    return side_port(PageSurface::partner(p.exits[j - 1]));
  }
  return side_port(PageSurface::partner(p.exits[(j - 1 + m) % m]));
}

Port StrandSet::chord_to(int c, int j) const {
  const auto& p = curves_[c];
  const int m = p.length();
  if (p.kind == CurveKind::Arc && j == m) return corner_port(p.end);
  return side_port(p.exits[j]);
}

std::optional<Cursor> StrandSet::step(const Cursor& u) const {
  const auto& p = curves_[u.curve];
  const int m = p.length();
  Cursor v = u;
  if (p.kind == CurveKind::Arc) {
    if (u.fwd) {
      if (u.chord == m) return std::nullopt;
      v.chord = u.chord + 1;
    } else {
      if (u.chord == 0) return std::nullopt;
      v.chord = u.chord - 1;
    }
  } else {
    v.chord = u.fwd ? (u.chord + 1) % m : (u.chord - 1 + m) % m;
  }
  return v;
}

int StrandSet::dist(const Port& a, const Port& b) const {
  const int L = model_.circle_length();
  return ((b.coord - a.coord) % L + L) % L;
}

int StrandSet::compare(Cursor u, Cursor v) const {
  int limit = 4;
  for (const auto& c : curves_) limit += 2 * c.length();
  for (int it = 0; it < limit; ++it) {
    Port tu = to(u);
    Port tv = to(v);
    if (tu.corner && tv.corner && tu.h == tv.h) {
      if (tv.slot < tu.slot) return -1;
      if (tv.slot > tu.slot) return 1;
      return 0;
    }
    if (!tu.corner && !tv.corner && tu.h == tv.h) {
      auto nu = step(u);
      auto nv = step(v);
      if (!nu || !nv) return 0;
      u = *nu;
      v = *nv;
      continue;
    }
    Port s = from(u);
    return dist(s, tv) < dist(s, tu) ? -1 : 1;
  }
  return 0;
}

Cursor StrandSet::cursor_at(const Point& pt, int h) const {
  const auto& p = curves_[pt.curve];
  const int m = p.length();
  if (p.exits[pt.index] == h) return {pt.curve, pt.index, false};
  int next = pt.index + 1;
  if (p.kind == CurveKind::Closed) next %= m;
  return {pt.curve, next, true};
}

std::vector<Point> StrandSet::sorted_points(int h, const std::vector<int>& curves) const {
  std::vector<Point> pts;
  for (int c : curves) {
    const auto& p = curves_[c];
    for (int k = 0; k < p.length(); ++k)
      if (p.exits[k] == h || PageSurface::partner(p.exits[k]) == h) pts.push_back({c, k});
  }
  // insertion sort: compare() is only a strict order for disjoint strands
  for (size_t i = 1; i < pts.size(); ++i) {
    size_t j = i;
    while (j > 0 && compare(cursor_at(pts[j], h), cursor_at(pts[j - 1], h)) < 0) {
      std::swap(pts[j], pts[j - 1]);
      --j;
    }
  }
  return pts;
}

namespace {

struct Key {
  long d = 0;
  long r = 0;
  friend bool operator<(const Key& a, const Key& b) { return a.d != b.d ? a.d < b.d : a.r < b.r; }
};

}  // namespace

std::vector<std::vector<ChordCrossing>> StrandSet::chord_crossings(int crossed, int other) const {
  const auto& p = curves_[crossed];
  const auto& g = curves_[other];
  const long L = model_.circle_length();
  const int mp = p.length();
  std::vector<std::vector<ChordCrossing>> out(num_chords(crossed));
  if (g.length() == 0 && g.kind == CurveKind::Closed) return out;

  // rank of each crossing point of `other` on the two sides it lies on
  std::vector<int> rank_exit(g.length()), rank_entry(g.length());
  {
    std::vector<int> sides;
    for (int x : g.exits) {
      sides.push_back(x);
      sides.push_back(PageSurface::partner(x));
    }
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
    for (int h : sides) {
      auto pts = sorted_points(h, {other});
      for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        if (g.exits[pts[i].index] == h)
          rank_exit[pts[i].index] = i;
        else
          rank_entry[pts[i].index] = i;
      }
    }
  }
  auto point_rank = [&](int k, int h) { return g.exits[k] == h ? rank_exit[k] : rank_entry[k]; };

  auto from_key_raw = [&](int i) -> std::pair<Port, long> {
    Port f = chord_from(other, i);
    if (f.corner) return {f, 2 * f.slot};
    int k = g.kind == CurveKind::Arc ? i - 1 : (i - 1 + g.length()) % g.length();
    return {f, 2L * point_rank(k, f.h)};
  };
  auto to_key_raw = [&](int i) -> std::pair<Port, long> {
    Port t = chord_to(other, i);
    if (t.corner) return {t, 2 * t.slot};
    return {t, 2L * point_rank(i, t.h)};
  };

  for (int j = 0; j < num_chords(crossed); ++j) {
    Port A = chord_from(crossed, j);
    Port B = chord_to(crossed, j);
    auto rank_at = [&](const Port& P, bool is_start) -> long {
      if (P.corner) return 2 * P.slot;
      // p's crossing point on side P.h, ordered against other's points by
      // following both strands back into the chord away from this chord.
      int k_on_P;
      Cursor cp;
      int side;
      if (is_start) {
        k_on_P = p.kind == CurveKind::Arc ? j - 1 : (j - 1 + mp) % mp;
        cp = {crossed, k_on_P, false};
        side = p.exits[k_on_P];  // partner of P.h
      } else {
        k_on_P = j;
        cp = {crossed, j, false};
        side = P.h;
      }
      long before = 0;
      bool seen_after = false;
      auto pts = sorted_points(P.h, {other});
      for (const auto& q : pts) {
        int r = compare(cp, cursor_at(q, side));
        int order_on_P = is_start ? -r : r;  // -1: p precedes q on P
        // strands parallel to p are kept on its left
        if (order_on_P > 0 || (is_start && r == 0)) {
          if (seen_after) throw std::logic_error("strand order inconsistent");
          ++before;
        } else {
          seen_after = true;
        }
      }
      return 2 * before - 1;
    };
    long rA = rank_at(A, true);
    long rB = rank_at(B, false);
    auto rel = [&](const Port& P, long r) -> Key {
      bool sameA = (P.corner == A.corner && P.h == A.h);
      if (sameA) return {r < rA ? L : 0, r};
      return {dist(A, P), r};
    };
    Key kA{0, rA};
    Key kB = rel(B, rB);
    if (B.corner == A.corner && B.h == A.h && rB == rA) continue;

    for (int i = 0; i < num_chords(other); ++i) {
      auto [F, rf] = from_key_raw(i);
      auto [T, rt] = to_key_raw(i);
      Key kf = rel(F, rf);
      Key kt = rel(T, rt);
      bool lf = kA < kf && kf < kB;
      bool lt = kA < kt && kt < kB;
      if (lf == lt) continue;
      Key k = lf ? kf : kt;
      // the counterclockwise arc from A to B lies to the right of the chord
      out[j].push_back({i, !lf, k.d, k.r});
    }
    std::sort(out[j].begin(), out[j].end(), [](const ChordCrossing& a, const ChordCrossing& b) {
      return Key{a.key_d, a.key_r} < Key{b.key_d, b.key_r};
    });
  }
  return out;
}

int StrandSet::linked_pairs(int a, int b) const {
  const auto& pa = curves_[a];
  const auto& pb = curves_[b];
  const long L = model_.circle_length();
  int count = 0;

  auto offset = [&](const Port& P, const Port& X) -> Key {
    long d = dist(P, X);
    if (d == 0) return {X.slot > P.slot ? 0 : L, X.slot};
    return {d, X.slot};
  };
  for (int j = 0; j < num_chords(a); ++j) {
    Port P = chord_from(a, j);
    Port Q = chord_to(a, j);
    for (int i = 0; i < num_chords(b); ++i) {
      Port R = chord_from(b, i);
      Port S = chord_to(b, i);
      auto shares_side = [](const Port& x, const Port& y) { return !x.corner && !y.corner && x.h == y.h; };
      if (shares_side(P, R) || shares_side(P, S) || shares_side(Q, R) || shares_side(Q, S)) continue;
      auto same_pt = [](const Port& x, const Port& y) { return x.corner && y.corner && x.h == y.h && x.slot == y.slot; };
      if (same_pt(P, R) || same_pt(P, S) || same_pt(Q, R) || same_pt(Q, S)) continue;
      Key q = offset(P, Q);
      bool r_in = offset(P, R) < q;
      bool s_in = offset(P, S) < q;
      if (r_in != s_in) ++count;
    }
  }

  for (int k = 0; k < pa.length(); ++k) {
    int s = pa.exits[k];
    int t = PageSurface::partner(s);
    for (int l = 0; l < pb.length(); ++l) {
      if (pb.exits[l] != s && pb.exits[l] != t) continue;
      Point gp{b, l};
      int nk = pa.kind == CurveKind::Arc ? k + 1 : (k + 1) % pa.length();
      Cursor af{a, nk, true};
      Cursor bf = cursor_at(gp, t);
      Port ta = to(af);
      Port tb = to(bf);
      if (!ta.corner && !tb.corner && ta.h == tb.h) continue;
      int of = compare(af, bf);
      int ob = compare(Cursor{a, k, false}, cursor_at(gp, s));
      if (of == 0 || ob == 0) continue;
      if (-of != ob) ++count;
    }
  }
  return count;
}

}  // namespace hf::detail
