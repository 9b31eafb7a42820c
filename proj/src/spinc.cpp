#include "hfcontact/spinc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hf {

namespace {

using I = std::int64_t;

linalg::IntVec to_vec(const Chain1& c) {
  linalg::IntVec v(static_cast<int>(c.size()));
  for (size_t i = 0; i < c.size(); ++i) v(static_cast<int>(i)) = c[i];
  return v;
}

// Edges of one curve in cyclic order, starting from its lowest edge id.
std::vector<int> curve_edges(const HeegaardDiagram& d, Family f, int curve) {
  std::vector<int> all;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (d.edges[e].family == f && d.edges[e].curve == curve) all.push_back(e);
  if (all.empty()) return all;
  std::map<int, int> from_tail;
  for (int e : all) from_tail[d.edges[e].tail] = e;
  std::vector<int> order{all.front()};
  while (order.size() < all.size()) {
    auto it = from_tail.find(d.edges[order.back()].head);
    if (it == from_tail.end() || it->second == order.front())
      throw std::logic_error("curve edges do not form a single cycle");
    order.push_back(it->second);
  }
  return order;
}

// Shortest path along a curve from vertex a to vertex b; forward on ties.
void add_curve_path(const HeegaardDiagram& d, Family f, int curve, int a, int b, I sign, Chain1& out) {
  if (a == b) return;
  auto order = curve_edges(d, f, curve);
  const int n = static_cast<int>(order.size());
  int ia = -1, ib = -1;
  for (int k = 0; k < n; ++k) {
    if (d.edges[order[k]].tail == a) ia = k;
    if (d.edges[order[k]].tail == b) ib = k;
  }
  if (ia < 0 || ib < 0) throw PreconditionError("point does not lie on the curve");
  int fwd = ((ib - ia) % n + n) % n;
  if (fwd <= n - fwd) {
    for (int k = 0; k < fwd; ++k) out[order[(ia + k) % n]] += sign;
  } else {
    for (int k = 0; k < n - fwd; ++k) out[order[((ia - 1 - k) % n + n) % n]] -= sign;
  }
}

}  // namespace

std::vector<I> chain_boundary(const HeegaardDiagram& d, const Chain1& c) {
  std::vector<I> b(d.vertices.size(), 0);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    b[d.edges[e].head] += c[e];
    b[d.edges[e].tail] -= c[e];
  }
  return b;
}

Chain1 curve_chain(const HeegaardDiagram& d, Family f, int curve) {
  Chain1 c(d.edges.size(), 0);
  for (size_t e = 0; e < d.edges.size(); ++e)
    if (d.edges[e].family == f && d.edges[e].curve == curve) c[e] = 1;
  return c;
}

Chain1 region_chain(const HeegaardDiagram& d, int region) {
  Chain1 c(d.edges.size(), 0);
  for (const auto& cycle : d.regions[region].boundary)
    for (int dart : cycle) c[HeegaardDiagram::edge_of(dart)] += (dart & 1) ? -1 : 1;
  return c;
}

H1Model h1_model(const HeegaardDiagram& d) {
  const int nv = static_cast<int>(d.vertices.size());
  const int ne = static_cast<int>(d.edges.size());
  linalg::IntMat d1 = linalg::IntMat::Zero(nv, ne);
  for (int e = 0; e < ne; ++e) {
    d1(d.edges[e].head, e) += 1;
    d1(d.edges[e].tail, e) -= 1;
  }
  auto s1 = linalg::smith_normal_form(d1);
  int r = 0;
  for (auto x : s1.diagonal())
    if (x != 0) ++r;
  const int z = ne - r;

  H1Model m;
  m.cycle_basis = s1.V.rightCols(z);
  m.cycle_coords = s1.Vinv.bottomRows(z);

  std::vector<Chain1> rels;
  for (int k = 0; k < static_cast<int>(d.regions.size()); ++k) rels.push_back(region_chain(d, k));
  for (int i = 0; i < d.num_curves; ++i) {
    rels.push_back(curve_chain(d, Family::Alpha, i));
    rels.push_back(curve_chain(d, Family::Beta, i));
  }
  m.relations = linalg::IntMat::Zero(z, static_cast<int>(rels.size()));
  for (size_t k = 0; k < rels.size(); ++k) m.relations.col(static_cast<int>(k)) = m.cycle_coords * to_vec(rels[k]);

  linalg::IntMat regions_only = m.relations.leftCols(static_cast<int>(d.regions.size()));
  int nz = 0;
  for (auto x : linalg::smith_normal_form(regions_only).diagonal())
    if (x != 0) ++nz;
  m.surface_rank = z - nz;

  m.smith = linalg::smith_normal_form(m.relations);
  auto diag = m.smith.diagonal();
  for (int i = 0; i < z; ++i) {
    I order = i < static_cast<int>(diag.size()) ? diag[i] : 0;
    if (order == 1) continue;
    m.kept.push_back(i);
    m.orders.push_back(order);
  }
  return m;
}

Chain1 connecting_loop(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
  Chain1 c(d.edges.size(), 0);
  const int n = d.num_curves;
  std::vector<int> xb(n), yb(n);
  for (int i = 0; i < n; ++i) {
    add_curve_path(d, Family::Alpha, i, x.points[i], y.points[i], 1, c);
    xb[d.vertices[x.points[i]].beta] = x.points[i];
    yb[d.vertices[y.points[i]].beta] = y.points[i];
  }
  for (int j = 0; j < n; ++j) add_curve_path(d, Family::Beta, j, yb[j], xb[j], 1, c);
  return c;
}

std::vector<I> difference_class(const HeegaardDiagram& d, const H1Model& m, const Chain1& cycle) {
  for (I b : chain_boundary(d, cycle))
    if (b != 0) throw PreconditionError("difference class of a chain that is not a cycle");
  linalg::IntVec u = m.smith.U * (m.cycle_coords * to_vec(cycle));
  std::vector<I> out;
  for (size_t k = 0; k < m.kept.size(); ++k) {
    I v = u(m.kept[k]);
    I ord = m.orders[k];
    if (ord != 0) v = ((v % ord) + ord) % ord;
    out.push_back(v);
  }
  return out;
}

SpincPartition partition_spinc(const HeegaardDiagram& d, const std::vector<Generator>& gens, int x) {
  auto m = h1_model(d);
  SpincPartition p;
  p.block_of.assign(gens.size(), -1);
  std::map<std::vector<I>, int> index;
  auto place = [&](int g) {
    auto cls = difference_class(d, m, connecting_loop(d, gens[x], gens[g]));
    auto [it, fresh] = index.emplace(cls, static_cast<int>(p.blocks.size()));
    if (fresh) p.blocks.emplace_back();
    p.blocks[it->second].push_back(g);
    p.block_of[g] = it->second;
  };
  place(x);
  for (int g = 0; g < static_cast<int>(gens.size()); ++g)
    if (g != x) place(g);
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  p.xi_block = 0;
  return p;
}

}  // namespace hf
