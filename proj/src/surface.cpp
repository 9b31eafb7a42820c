#include "hfcontact/surface.hpp"

#include <algorithm>
#include <sstream>

#include "strands.hpp"

namespace hf {

TwistWord inverse(const TwistWord& word) {
  TwistWord out(word.rbegin(), word.rend());
  for (auto& t : out) t.sign = -t.sign;
  return out;
}

PageSurface::PageSurface(std::vector<std::vector<int>> rotations) : rotations_(std::move(rotations)) {
  int total = 0;
  for (const auto& r : rotations_) total += static_cast<int>(r.size());
  if (rotations_.empty()) throw StructureError("page has no vertices");
  if (total % 2 != 0) throw StructureError("odd number of half-edges");
  num_edges_ = total / 2;
  vertex_.assign(total, -1);
  position_.assign(total, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    for (int i = 0; i < static_cast<int>(rotations_[v].size()); ++i) {
      int h = rotations_[v][i];
      if (h < 0 || h >= total) {
        std::ostringstream msg;
        msg << "vertex " << v << ": half-edge " << h << " out of range";
        throw StructureError(msg.str());
      }
      if (vertex_[h] >= 0) {
        std::ostringstream msg;
        msg << "half-edge " << h << " appears twice (vertices " << vertex_[h] << " and " << v << ")";
        throw StructureError(msg.str());
      }
      vertex_[h] = v;
      position_[h] = i;
    }
  }
  face_of_.assign(total, -1);
  for (int h = 0; h < total; ++h) {
    if (face_of_[h] >= 0) continue;
    std::vector<int> cyc;
    int g = h;
    do {
      face_of_[g] = static_cast<int>(faces_.size());
      cyc.push_back(g);
      g = next_ccw(partner(g));
    } while (g != h);
    faces_.push_back(std::move(cyc));
  }
  // connectivity
  std::vector<int> seen(num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : rotations_[v]) {
      int w = vertex_[partner(h)];
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < num_vertices(); ++v)
    if (!seen[v]) throw StructureError("page is disconnected at vertex " + std::to_string(v));
  if (num_boundary_components() < 1) throw StructureError("page has no boundary");
  if ((2 - euler_characteristic() - num_boundary_components()) % 2 != 0)
    throw StructureError("rotation system gives inconsistent Euler characteristic");
}

int PageSurface::next_ccw(int h) const {
  const auto& r = rotations_[vertex_[h]];
  return r[(position_[h] + 1) % r.size()];
}

int PageSurface::prev_ccw(int h) const {
  const auto& r = rotations_[vertex_[h]];
  return r[(position_[h] + r.size() - 1) % r.size()];
}

CurvePath PageSurface::boundary_curve(int b) const { return reduce(*this, CurvePath::closed(faces_.at(b))); }

void PageSurface::check_path(const CurvePath& p) const {
  const int H = num_half_edges();
  auto bad = [](const std::string& s) { throw InvalidCurveError(s); };
  for (int x : p.exits)
    if (x < 0 || x >= H) bad("half-edge " + std::to_string(x) + " is not on the page");
  if (p.kind == CurveKind::Arc) {
    if (p.start.corner < 0 || p.start.corner >= H || p.end.corner < 0 || p.end.corner >= H)
      bad("arc endpoint corner is not on the page");
    int cur = vertex_of(p.start.corner);
    for (size_t k = 0; k < p.exits.size(); ++k) {
      if (vertex_of(p.exits[k]) != cur) bad("walk is broken at step " + std::to_string(k));
      cur = vertex_of(partner(p.exits[k]));
    }
    if (cur != vertex_of(p.end.corner)) bad("arc does not end at its end corner");
  } else {
    if (p.exits.empty()) bad("closed curve is null-homotopic");
    for (size_t k = 0; k < p.exits.size(); ++k) {
      int nxt = p.exits[(k + 1) % p.exits.size()];
      if (vertex_of(nxt) != vertex_of(partner(p.exits[k]))) bad("walk is broken at step " + std::to_string(k));
    }
  }
}

int euler_characteristic(const PageSurface& s) { return s.euler_characteristic(); }

CurvePath reduce(const PageSurface& s, const CurvePath& p) {
  s.check_path(p);
  CurvePath out = p;
  out.exits.clear();
  for (int x : p.exits) {
    if (!out.exits.empty() && out.exits.back() == PageSurface::partner(x))
      out.exits.pop_back();
    else
      out.exits.push_back(x);
  }
  if (p.kind == CurveKind::Closed) {
    size_t b = 0;
    size_t e = out.exits.size();
    while (e - b >= 2 && out.exits[b] == PageSurface::partner(out.exits[e - 1])) {
      ++b;
      --e;
    }
    out.exits = std::vector<int>(out.exits.begin() + b, out.exits.begin() + e);
    // canonical starting point: lexicographically least rotation
    std::vector<int> best = out.exits;
    for (size_t k = 1; k < out.exits.size(); ++k) {
      std::vector<int> rot(out.exits.begin() + k, out.exits.end());
      rot.insert(rot.end(), out.exits.begin(), out.exits.begin() + k);
      if (rot < best) best = rot;
    }
    out.exits = best;
  }
  return out;
}

CurvePath reduce(const PageSurface& s, const CurvePath& p, const std::vector<int>& arc_edges) {
  for (int e : arc_edges)
    if (e < 0 || e >= s.num_edges()) throw StructureError("cut arc " + std::to_string(e) + " is not a spine edge");
  return reduce(s, p);
}

namespace {

CurvePath twist_once(const PageSurface& s, const detail::SpineModel& model, const Twist& t, const CurvePath& p) {
  CurvePath gamma = reduce(s, t.curve);
  if (gamma.length() != t.curve.length()) throw InvalidCurveError("twist curve is not reduced");
  if (!is_simple(s, gamma)) throw InvalidCurveError("twist curve is not embedded");
  CurvePath pc = model.contract(p);
  CurvePath gc = model.contract(gamma);
  if (gc.exits.empty()) return p;  // twist about a boundary-parallel disk curve acts trivially
  detail::StrandSet ss(model, {pc, gc});
  auto crossings = ss.chord_crossings(0, 1);
  const int mg = gc.length();

  CurvePath out = pc;
  out.exits.clear();
  for (int j = 0; j < ss.num_chords(0); ++j) {
    for (const auto& c : crossings[j]) {
      bool forward = c.left_to_right == (t.sign > 0);
      int i = c.chord;
      for (int k = 0; k < mg; ++k) {
        if (forward)
          out.exits.push_back(gc.exits[(i + k) % mg]);
        else
          out.exits.push_back(PageSurface::partner(gc.exits[((i - 1 - k) % mg + mg) % mg]));
      }
    }
    if (j < pc.length()) out.exits.push_back(pc.exits[j]);
  }
  return reduce(s, model.expand(out));
}

}  // namespace

CurvePath apply_twist(const PageSurface& s, const TwistWord& word, const CurvePath& path) {
  for (const auto& t : word) s.check_path(t.curve);
  CurvePath cur = reduce(s, path);
  if (word.empty()) return cur;
  auto model = detail::SpineModel::bfs(s);
  for (const auto& t : word) cur = twist_once(s, model, t, cur);
  return cur;
}

int geometric_intersection(const PageSurface& s, const CurvePath& a, const CurvePath& b) {
  CurvePath ra, rb;
  try {
    ra = reduce(s, a);
    rb = reduce(s, b);
  } catch (const InvalidCurveError& e) {
    throw MismatchError(std::string("curve is not on this page: ") + e.what());
  }
  // Arcs sharing an endpoint are compared after pushing the second one
  // slightly to its right (start forward, end backward along the boundary).
  if (ra.kind == CurveKind::Arc && rb.kind == CurveKind::Arc) {
    for (auto* e : {&ra.start, &ra.end, &rb.start, &rb.end}) e->slot *= 2;
    auto shared = [&](const Endpoint& e) { return e == ra.start || e == ra.end; };
    bool s_shared = shared(rb.start);
    bool e_shared = shared(rb.end);
    if (s_shared) rb.start.slot += 1;
    if (e_shared) rb.end.slot -= 1;
  }
  auto model = detail::SpineModel::bfs(s);
  CurvePath ca = model.contract(ra);
  CurvePath cb = model.contract(rb);
  if ((ca.kind == CurveKind::Closed && ca.exits.empty()) || (cb.kind == CurveKind::Closed && cb.exits.empty())) return 0;
  detail::StrandSet ss(model, {ca, cb});
  int n = 0;
  for (const auto& v : ss.chord_crossings(0, 1)) n += static_cast<int>(v.size());
  int check = ss.linked_pairs(0, 1);
  if (check != n) throw std::logic_error("intersection counts disagree: " + std::to_string(n) + " vs " + std::to_string(check));
  return n;
}

int cocore_intersection(const CurvePath& p, int edge) {
  return static_cast<int>(std::count_if(p.exits.begin(), p.exits.end(), [&](int x) { return x / 2 == edge; }));
}

bool is_simple(const PageSurface& s, const CurvePath& p) {
  CurvePath r = reduce(s, p);
  auto model = detail::SpineModel::bfs(s);
  CurvePath c = model.contract(r);
  if (c.kind == CurveKind::Closed && c.exits.empty()) return true;
  // A closed curve that is a proper power is never simple.
  if (c.kind == CurveKind::Closed) {
    const int m = c.length();
    for (int d = 1; d < m; ++d)
      if (m % d == 0) {
        bool periodic = true;
        for (int k = 0; k < m && periodic; ++k) periodic = c.exits[k] == c.exits[(k + d) % m];
        if (periodic) return false;
      }
  }
  detail::StrandSet ss(model, {c, c});
  return ss.linked_pairs(0, 1) == 0;
}

}  // namespace hf
