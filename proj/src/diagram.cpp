#include "hfcontact/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hf {

DiagramIndex::DiagramIndex(const HeegaardDiagram& d) : d_(&d) {
  const int D = d.num_darts();
  left_.assign(D, -1);
  next_.assign(D, -1);
  ccw_.assign(D, -1);
  cw_.assign(D, -1);
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r)
    for (const auto& cyc : d.regions[r].boundary)
      for (size_t i = 0; i < cyc.size(); ++i) {
        int x = cyc[i];
        if (x < 0 || x >= D) throw PreconditionError("region boundary references a missing dart");
        if (left_[x] >= 0) throw PreconditionError("dart " + std::to_string(x) + " bounds two regions");
        left_[x] = r;
        next_[x] = cyc[(i + 1) % cyc.size()];
      }
  for (int x = 0; x < D; ++x)
    if (left_[x] < 0) throw PreconditionError("dart " + std::to_string(x) + " bounds no region");
  // next_face(x) = prev_ccw(twin(x))
  for (int x = 0; x < D; ++x) {
    int y = next_[x];
    int t = HeegaardDiagram::twin(x);
    cw_[t] = y;
    ccw_[y] = t;
  }
  rot_.assign(d.vertices.size(), {-1, -1, -1, -1});
  std::vector<int> count(d.vertices.size(), 0);
  for (int x = 0; x < D; ++x) {
    int v = d.tail(x);
    if (v < 0 || v >= static_cast<int>(d.vertices.size())) throw PreconditionError("dart leaves a missing vertex");
    ++count[v];
  }
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (count[v] != 4) throw PreconditionError("vertex " + std::to_string(v) + " is not 4-valent");
  }
  for (int x = 0; x < D; ++x) {
    int v = d.tail(x);
    if (rot_[v][0] >= 0) continue;
    if (d.family(x) != Family::Alpha || (x & 1)) continue;
    int y = x;
    for (int k = 0; k < 4; ++k) {
      if (d.tail(y) != v) throw PreconditionError("rotation at vertex " + std::to_string(v) + " leaves the vertex");
      rot_[v][k] = y;
      y = ccw_[y];
    }
    if (y != x) throw PreconditionError("rotation at vertex " + std::to_string(v) + " does not close up");
  }
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
    if (rot_[v][0] < 0) throw PreconditionError("vertex " + std::to_string(v) + " has no outgoing alpha dart");
}

ValidationReport check(const HeegaardDiagram& d) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.problems.push_back(s); };
  const int V = static_cast<int>(d.vertices.size());
  const int E = static_cast<int>(d.edges.size());
  if (d.num_curves <= 0) bad("diagram has no curves");
  for (int v = 0; v < V; ++v) {
    const auto& x = d.vertices[v];
    if (x.alpha < 0 || x.alpha >= d.num_curves) bad("vertex " + std::to_string(v) + ": alpha curve out of range");
    if (x.beta < 0 || x.beta >= d.num_curves) bad("vertex " + std::to_string(v) + ": beta curve out of range");
  }
  for (int e = 0; e < E; ++e) {
    const auto& x = d.edges[e];
    if (x.tail < 0 || x.tail >= V) bad("edge " + std::to_string(e) + " references missing vertex " + std::to_string(x.tail));
    if (x.head < 0 || x.head >= V) bad("edge " + std::to_string(e) + " references missing vertex " + std::to_string(x.head));
    if (x.curve < 0 || x.curve >= d.num_curves) bad("edge " + std::to_string(e) + ": curve out of range");
  }
  if (!rep.ok()) return rep;
  for (int e = 0; e < E; ++e) {
    const auto& x = d.edges[e];
    for (int v : {x.tail, x.head}) {
      int c = x.family == Family::Alpha ? d.vertices[v].alpha : d.vertices[v].beta;
      if (c != x.curve) bad("edge " + std::to_string(e) + " on " + family_name(x.family) + " " + std::to_string(x.curve) +
                            " ends at vertex " + std::to_string(v) + " which is not on that curve");
    }
  }
  // face cycles close up
  std::vector<int> seen(2 * E, 0);
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r) {
    const auto& reg = d.regions[r];
    if (reg.boundary.empty()) bad("region " + std::to_string(r) + " has no boundary");
    if (reg.genus < 0) bad("region " + std::to_string(r) + " has negative genus");
    for (const auto& cyc : reg.boundary) {
      if (cyc.empty()) bad("region " + std::to_string(r) + " has an empty boundary cycle");
      for (size_t i = 0; i < cyc.size(); ++i) {
        int x = cyc[i];
        if (x < 0 || x >= 2 * E) {
          bad("region " + std::to_string(r) + " references missing dart " + std::to_string(x));
          continue;
        }
        ++seen[x];
        int y = cyc[(i + 1) % cyc.size()];
        if (y >= 0 && y < 2 * E && d.head(x) != d.tail(y))
          bad("region " + std::to_string(r) + ": boundary does not close up after dart " + std::to_string(x));
        else if (y >= 0 && y < 2 * E && d.family(x) == d.family(y))
          bad("region " + std::to_string(r) + ": boundary turns without changing curve family at vertex " +
              std::to_string(d.head(x)));
      }
    }
  }
  for (int x = 0; x < 2 * E; ++x)
    if (seen[x] != 1)
      bad("dart " + std::to_string(x) + " appears " + std::to_string(seen[x]) + " times in region boundaries");
  if (d.basepoint < 0 || d.basepoint >= static_cast<int>(d.regions.size())) bad("basepoint region out of range");
  if (!rep.ok()) return rep;

  // vertex rotations
  std::vector<int> out_count(V, 0);
  for (int x = 0; x < 2 * E; ++x) ++out_count[d.tail(x)];
  for (int v = 0; v < V; ++v)
    if (out_count[v] != 4) bad("vertex " + std::to_string(v) + " has valence " + std::to_string(out_count[v]));
  if (!rep.ok()) return rep;
  try {
    DiagramIndex idx(d);
    for (int v = 0; v < V; ++v) {
      const auto& r = idx.rotation(v);
      for (int k = 0; k < 4; ++k)
        if (d.family(r[k]) == d.family(r[(k + 1) % 4]))
          bad("vertex " + std::to_string(v) + ": curves do not alternate around it");
    }
  } catch (const PreconditionError& e) {
    bad(e.what());
    return rep;
  }

  // each curve is a single closed cycle, consistently oriented
  for (int fam = 0; fam < 2; ++fam)
    for (int c = 0; c < d.num_curves; ++c) {
      std::vector<int> es;
      for (int e = 0; e < E; ++e)
        if (static_cast<int>(d.edges[e].family) == fam && d.edges[e].curve == c) es.push_back(e);
      std::string name = std::string(family_name(static_cast<Family>(fam))) + " " + std::to_string(c);
      if (es.empty()) {
        bad(name + " has no vertex");
        continue;
      }
      std::map<int, int> from_tail;
      bool dup = false;
      for (int e : es) {
        if (from_tail.count(d.edges[e].tail)) dup = true;
        from_tail[d.edges[e].tail] = e;
      }
      if (dup) {
        bad(name + " is not consistently oriented");
        continue;
      }
      int e = es[0];
      size_t steps = 0;
      do {
        auto it = from_tail.find(d.edges[e].head);
        if (it == from_tail.end()) {
          bad(name + " is not closed");
          break;
        }
        e = it->second;
        ++steps;
      } while (e != es[0] && steps <= es.size());
      if (steps != es.size()) bad(name + " is not a single cycle");
    }

  int chi = V - E;
  for (const auto& r : d.regions) chi += 2 - 2 * r.genus - static_cast<int>(r.boundary.size());
  if (chi != 2 - 2 * d.num_curves) {
    std::ostringstream os;
    os << "Euler characteristic " << chi << " does not match genus " << d.num_curves;
    bad(os.str());
  }
  return rep;
}

bool validate(const HeegaardDiagram& d) { return check(d).ok(); }

std::vector<RegionInfo> regions(const HeegaardDiagram& d) {
  std::vector<RegionInfo> out;
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r) {
    RegionInfo info;
    info.id = r;
    for (const auto& c : d.regions[r].boundary) info.corners += static_cast<int>(c.size());
    info.contains_basepoint = r == d.basepoint;
    info.genus = d.regions[r].genus;
    info.boundary_components = static_cast<int>(d.regions[r].boundary.size());
    out.push_back(info);
  }
  return out;
}

bool is_nice(const HeegaardDiagram& d) {
  for (const auto& r : regions(d)) {
    if (r.contains_basepoint) continue;
    if (!r.is_disk() || (r.corners != 2 && r.corners != 4)) return false;
  }
  return true;
}

HeegaardDiagram canonicalize_regions(HeegaardDiagram d) {
  for (auto& r : d.regions) {
    for (auto& c : r.boundary) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    std::sort(r.boundary.begin(), r.boundary.end());
  }
  std::vector<int> order(d.regions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d.regions[a].boundary[0][0] < d.regions[b].boundary[0][0]; });
  std::vector<DiagramRegion> regs;
  int bp = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    regs.push_back(d.regions[order[i]]);
    if (order[i] == d.basepoint) bp = static_cast<int>(i);
  }
  d.regions = std::move(regs);
  d.basepoint = bp;
  return d;
}

// ---------------------------------------------------------------------------

HeegaardDiagram finger_move(const HeegaardDiagram& d, int base, const std::vector<int>& path) {
  DiagramIndex idx(d);
  const int D = d.num_darts();
  if (base < 0 || base >= D || d.family(base) != Family::Beta) throw PreconditionError("finger base must be a beta dart");
  if (path.empty()) throw PreconditionError("finger path is empty");
  std::vector<int> reg;  // R_0 .. R_k
  reg.push_back(idx.left_region(base));
  std::set<int> used{HeegaardDiagram::edge_of(base)};
  for (int x : path) {
    if (x < 0 || x >= D || d.family(x) != Family::Alpha) throw PreconditionError("finger must cross alpha darts");
    if (idx.left_region(x) != reg.back()) throw PreconditionError("finger path is not connected");
    if (!used.insert(HeegaardDiagram::edge_of(x)).second) throw PreconditionError("finger crosses an edge twice");
    reg.push_back(idx.left_region(HeegaardDiagram::twin(x)));
  }
  for (size_t i = 0; i + 1 < reg.size(); ++i)
    if (reg[i] == d.basepoint) throw PreconditionError("finger crosses the basepoint region");
  const int k = static_cast<int>(path.size());

  HeegaardDiagram out = d;
  out.regions.clear();
  std::vector<std::array<int, 4>> rot(d.vertices.size());
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) rot[v] = idx.rotation(v);
  auto replace = [&](int v, int from, int to) {
    for (auto& x : rot[v])
      if (x == from) {
        x = to;
        return;
      }
    throw std::logic_error("finger move lost a dart");
  };
  auto new_vertex = [&](int alpha, int beta, int side) {
    out.vertices.push_back({alpha, beta, side});
    rot.push_back({-1, -1, -1, -1});
    return static_cast<int>(out.vertices.size()) - 1;
  };
  // Split the edge under dart x at the given interior vertices (listed along x);
  // returns, for each of the pieces in x-order, the dart running along x.
  auto split = [&](int x, const std::vector<int>& mids) {
    const int e = HeegaardDiagram::edge_of(x);
    const bool rev = x & 1;
    std::vector<int> seq{d.tail(x)};
    seq.insert(seq.end(), mids.begin(), mids.end());
    seq.push_back(d.head(x));
    if (rev) std::reverse(seq.begin(), seq.end());
    std::vector<int> ids;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      DiagramEdge piece = d.edges[e];
      piece.tail = seq[i];
      piece.head = seq[i + 1];
      if (i == 0) {
        out.edges[e] = piece;
        ids.push_back(e);
      } else {
        out.edges.push_back(piece);
        ids.push_back(static_cast<int>(out.edges.size()) - 1);
      }
    }
    if (rev) std::reverse(ids.begin(), ids.end());
    std::vector<int> along;
    for (int id : ids) along.push_back(2 * id + (rev ? 1 : 0));
    replace(d.tail(x), x, along.front());
    replace(d.head(x), HeegaardDiagram::twin(x), HeegaardDiagram::twin(along.back()));
    return along;
  };

  const int beta_curve = d.curve(base);
  std::vector<int> cl(k), cr(k);
  for (int i = 0; i < k; ++i) {
    int side = d.vertices[d.tail(path[i])].side;
    cr[i] = new_vertex(d.curve(path[i]), beta_curve, side);
    cl[i] = new_vertex(d.curve(path[i]), beta_curve, side);
  }
  std::vector<std::array<int, 3>> apieces(k);
  for (int i = 0; i < k; ++i) {
    auto a = split(path[i], {cr[i], cl[i]});
    apieces[i] = {a[0], a[1], a[2]};
  }
  std::vector<int> bmids;
  for (int i = 0; i < k; ++i) bmids.push_back(cl[i]);
  for (int i = k - 1; i >= 0; --i) bmids.push_back(cr[i]);
  auto bp = split(base, bmids);  // 2k+1 pieces along the finger
  for (int i = 0; i < k; ++i) {
    int in_l = bp[i];              // arrives at cl[i] from the base side
    int out_l = bp[i + 1];         // leaves cl[i] toward the tip
    int in_r = bp[2 * k - i - 1];  // arrives at cr[i] from the tip side
    int out_r = bp[2 * k - i];     // leaves cr[i] toward the base
    const auto& a = apieces[i];
    rot[cl[i]] = {HeegaardDiagram::twin(a[1]), out_l, a[2], HeegaardDiagram::twin(in_l)};
    rot[cr[i]] = {HeegaardDiagram::twin(a[0]), HeegaardDiagram::twin(in_r), a[1], out_r};
  }

  // faces from the new rotation
  const int ND = out.num_darts();
  std::vector<int> pos(ND, -1), vert(ND, -1);
  for (int v = 0; v < static_cast<int>(rot.size()); ++v)
    for (int j = 0; j < 4; ++j) {
      pos[rot[v][j]] = j;
      vert[rot[v][j]] = v;
    }
  auto next_face = [&](int x) {
    int t = HeegaardDiagram::twin(x);
    return rot[vert[t]][(pos[t] + 3) % 4];
  };
  std::vector<int> cyc_of(ND, -1);
  std::vector<std::vector<int>> cycles;
  for (int x = 0; x < ND; ++x) {
    if (cyc_of[x] >= 0) continue;
    std::vector<int> c;
    int y = x;
    do {
      cyc_of[y] = static_cast<int>(cycles.size());
      c.push_back(y);
      y = next_face(y);
    } while (y != x);
    cycles.push_back(std::move(c));
  }

  // Group the new cycles by the old region they came from. Reused edge ids
  // always carry the piece lying outside the finger, so an old dart still
  // bounds the region it bounded before; cycles made only of new darts are
  // the squares and the bigon inside the finger.
  std::vector<int> parent(cycles.size(), -1);
  for (size_t c = 0; c < cycles.size(); ++c)
    for (int x : cycles[c])
      if (x < D) {
        parent[c] = idx.left_region(x);
        break;
      }
  std::map<int, std::vector<int>> by_parent;
  std::vector<std::vector<int>> fresh;
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (parent[c] < 0)
      fresh.push_back(cycles[c]);
    else
      by_parent[parent[c]].push_back(static_cast<int>(c));
  }
  std::map<int, int> cuts;
  for (int i = 0; i < k; ++i) cuts[reg[i]] += 1;
  int new_bp = -1;
  for (auto& [r, cs] : by_parent) {
    const auto& old = d.regions[r];
    int chi_old = 2 - 2 * old.genus - static_cast<int>(old.boundary.size());
    int chi_new = chi_old + cuts[r];
    int m = static_cast<int>(cs.size());
    bool was_disk = old.genus == 0 && old.boundary.size() == 1;
    if (was_disk || chi_new == m) {
      for (int c : cs) {
        if (r == d.basepoint) {
          if (new_bp >= 0) throw std::logic_error("basepoint region split");
          new_bp = static_cast<int>(out.regions.size());
        }
        out.regions.push_back({{cycles[c]}, 0});
      }
    } else if (m == 1 || (2 - chi_new - m) % 2 == 0) {
      DiagramRegion nr;
      for (int c : cs) nr.boundary.push_back(cycles[c]);
      nr.genus = (2 - chi_new - m) / 2;
      if (nr.genus < 0) throw std::logic_error("finger move produced an inconsistent region");
      if (r == d.basepoint) new_bp = static_cast<int>(out.regions.size());
      out.regions.push_back(std::move(nr));
    } else {
      throw std::logic_error("cannot regroup region boundaries after finger move");
    }
  }
  for (auto& c : fresh) out.regions.push_back({{c}, 0});
  out.basepoint = new_bp;
  out = canonicalize_regions(std::move(out));
  auto rep = check(out);
  if (!rep.ok()) throw std::logic_error("finger move produced an invalid diagram: " + rep.problems[0]);
  return out;
}

namespace {

long badness(const HeegaardDiagram& d) {
  long b = 0;
  for (const auto& r : regions(d)) {
    if (r.contains_basepoint) continue;
    if (!r.is_disk()) b += 1000 * (2 * r.genus + r.boundary_components);
    if (r.corners > 4) b += r.corners - 4;
  }
  return b;
}

}  // namespace

NicenResult nicen(const HeegaardDiagram& d0, int budget) {
  NicenResult res{d0, {}};
  const int kMaxLen = 4;
  while (!is_nice(res.diagram)) {
    if (static_cast<int>(res.moves.size()) >= budget)
      throw BudgetExceededError("nicening did not finish within " + std::to_string(budget) + " finger moves");
    const HeegaardDiagram& d = res.diagram;
    DiagramIndex idx(d);
    long cur = badness(d);
    auto infos = regions(d);
    std::vector<int> bad;
    for (const auto& r : infos)
      if (!r.contains_basepoint && (!r.is_disk() || r.corners > 4)) bad.push_back(r.id);
    std::stable_sort(bad.begin(), bad.end(), [&](int a, int b) {
      bool na = !infos[a].is_disk(), nb = !infos[b].is_disk();
      if (na != nb) return na;
      return infos[a].corners > infos[b].corners;
    });
    bool moved = false;
    for (int B : bad) {
      std::vector<int> bases;
      for (int x = 0; x < d.num_darts(); ++x)
        if (d.family(x) == Family::Beta && idx.left_region(x) == B) bases.push_back(x);
      // fingers whose tip reaches the basepoint region first, then any tip
      for (int pass = 0; pass < 2 && !moved; ++pass)
      for (int len = 1; len <= kMaxLen && !moved; ++len) {
        long best = cur;
        FingerMove best_move;
        HeegaardDiagram best_d;
        for (int b : bases) {
          // depth-first enumeration of crossing sequences of this length
          std::vector<int> p;
          std::function<void(int)> rec = [&](int region) {
            if (static_cast<int>(p.size()) == len) {
              if (pass == 0 && region != d.basepoint) return;
              HeegaardDiagram nd;
              try {
                nd = finger_move(d, b, p);
              } catch (const PreconditionError&) {
                return;
              }
              long s = badness(nd);
              if (s < best) {
                best = s;
                best_move = {b, p};
                best_d = std::move(nd);
              }
              return;
            }
            for (int x = 0; x < d.num_darts(); ++x) {
              if (d.family(x) != Family::Alpha || idx.left_region(x) != region) continue;
              int nxt = idx.left_region(HeegaardDiagram::twin(x));
              bool last = static_cast<int>(p.size()) + 1 == len;
              if (nxt == d.basepoint && !last) continue;
              p.push_back(x);
              rec(nxt);
              p.pop_back();
            }
          };
          rec(B);
        }
        if (best < cur) {
          res.moves.push_back(best_move);
          res.diagram = std::move(best_d);
          moved = true;
        }
      }
      if (moved) break;
    }
    if (!moved) throw BudgetExceededError("no finger move reduces the bad regions (a handle slide would be needed)");
  }
  return res;
}

}  // namespace hf
