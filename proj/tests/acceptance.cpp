// One line per acceptance criterion. With --expect-fail, exits 0 only when
// exactly the listed criteria fail.

#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "reference_lists.hpp"
#include "support.hpp"

using namespace hf;

namespace {

struct Outcome {
  std::vector<std::string> failed;
  void need(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

std::vector<std::string> names(const Report& r, const std::vector<int>& gens) {
  std::vector<std::string> out;
  for (int g : gens) out.push_back(r.generator_names[g]);
  return out;
}

int count_regions(const std::vector<RegionInfo>& rs, int corners) {
  int n = 0;
  for (const auto& r : rs)
    if (!r.contains_basepoint && r.is_disk() && r.corners == corners) ++n;
  return n;
}

int non_disks(const std::vector<RegionInfo>& rs) {
  int n = 0;
  for (const auto& r : rs)
    if (!r.contains_basepoint && !r.is_disk()) ++n;
  return n;
}

int non_basepoint(const std::vector<RegionInfo>& rs) {
  int n = 0;
  for (const auto& r : rs) n += !r.contains_basepoint;
  return n;
}

bool squares_to_zero(const GF2ChainComplex& c) {
  auto sq = c.boundary * c.boundary;
  for (int i = 0; i < sq.rows(); ++i)
    for (int j = 0; j < sq.cols(); ++j)
      if (sq(i, j) != GF2(0)) return false;
  return true;
}

std::vector<int> complement(const Report& r, const std::vector<int>& block) {
  std::vector<int> out;
  for (int g = 0; g < r.complex.size(); ++g)
    if (std::find(block.begin(), block.end(), g) == block.end()) out.push_back(g);
  return out;
}

std::vector<size_t> block_sizes(const Report& r) {
  std::vector<size_t> out;
  for (const auto& b : r.spinc.blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome basis_two() {
  Outcome o;
  const auto& r = hft::report("s1s2_basisII");
  o.need(r.complex.size() == 8, "8 generators");
  o.need(non_basepoint(r.regions) == 5 && count_regions(r.regions, 4) == 5, "5 square regions");
  auto diff = hft::table_mismatches(r, hft::kBasisIIListed);
  o.need(diff.empty(), "listed relations: " + hft::join(diff));
  o.need(r.total.dimension == 2, "homology of dimension 2");
  std::vector<std::vector<std::string>> reps;
  for (const auto& rep : r.total.representatives) reps.push_back(names(r, rep));
  o.need(reps == std::vector<std::vector<std::string>>{{"X"}, {"E"}}, "representatives [X], [E]");
  o.need(r.contact_status.nonzero, "contact class nonzero");
  return o;
}

Outcome basis_one() {
  Outcome o;
  auto raw = regions(build_heegaard(to_open_book(hft::fixture("s1s2_basisI_raw"))).diagram);
  o.need(non_disks(raw) == 1 && count_regions(raw, 6) == 1,
         "raw diagram has one non-disk region and one hexagon (found " + std::to_string(non_disks(raw)) + " non-disk, " +
             std::to_string(count_regions(raw, 6)) + " hexagons)");
  const auto& r = hft::report("s1s2_basisI_raw");
  o.need(!r.raw_nice, "raw diagram is not nice");
  o.need(is_nice(r.diagram) && non_basepoint(r.regions) == 9, "9 regions after nicening");
  o.need(r.complex.size() == 22, "22 generators");
  const auto& xi = r.spinc.blocks[r.spinc.xi_block];
  o.need(hft::sorted(names(r, xi)) == hft::sorted({"X", "C_1", "C_2", "E_11", "E_12", "F_1"}), "s_xi block");
  auto hx = homology(r.complex, xi);
  o.need(hx.rank == 2 && hx.kernel == 4, "s_xi rank 2, kernel 4");
  auto rest = complement(r, xi);
  auto hr = homology(r.complex, rest);
  o.need(rest.size() == 16 && hr.rank == 8 && hr.kernel == 8 && hr.dimension == 0,
         "complement of 16 generators with rank 8, kernel 8");
  o.need(r.total.dimension == 2, "total dimension 2");
  return o;
}

Outcome basis_three() {
  Outcome o;
  const auto& r = hft::report("s1s2_basisIII");
  o.need(r.complex.size() == 2, "2 generators");
  o.need(non_basepoint(r.regions) == 4 && count_regions(r.regions, 4) == 4, "4 square regions");
  o.need(hft::boundary(r, "A").empty() && hft::witnesses(r, "A", "X") == std::vector<std::string>{"R_1+R_2", "R_3+R_4"},
         "dA = 0 by R_1+R_2 and R_3+R_4");
  o.need(r.total.dimension == 2, "dimension 2");
  o.need(r.contact_status.nonzero, "contact class nonzero");
  return o;
}

Outcome overtwisted() {
  Outcome o;
  const auto& r = hft::report("s3_raw");
  o.need(non_basepoint(r.regions) == 13 && is_nice(r.diagram), "13 regions after nicening");
  o.need(r.complex.size() == 29, "29 generators");
  auto diff = hft::table_mismatches(r, hft::kS3);
  o.need(diff.empty(), "full differential: " + hft::join(diff));
  o.need(hft::boundary(r, "A") == std::vector<std::string>{"X"}, "dA = X");
  bool cancelling = false;
  for (const char* e : {"E_1", "E_2"}) {
    if (!hft::boundary(r, e).empty()) continue;
    for (int t = 0; t < r.complex.size(); ++t)
      if (hft::witnesses(r, e, r.generator_names[t]).size() == 2) cancelling = true;
  }
  o.need(cancelling, "dE = 0 with a cancelling pair (dE_1 = " + hft::join(hft::boundary(r, "E_1"), "+") +
                         ", dE_2 = " + hft::join(hft::boundary(r, "E_2"), "+") + ")");
  int k2 = 0;
  for (const char* t : {"C_22", "G_3", "H_1", "I_2"}) k2 += static_cast<int>(hft::witnesses(r, "K_2", t).size());
  o.need(hft::boundary(r, "K_2") == hft::sorted({"C_22", "G_3", "H_1", "I_2"}) && k2 == 4, "dK_2 with four witnesses");
  o.need(r.total.rank == 14 && r.total.kernel == 15 && r.total.dimension == 1, "rank 14, kernel 15, dimension 1");
  o.need(!r.contact_status.nonzero && names(r, r.contact_status.primitive) == std::vector<std::string>{"A"},
         "contact class zero with certificate A");
  return o;
}

Outcome spinc() {
  Outcome o;
  const auto& one = hft::report("s1s2_basisI_raw");
  auto m = h1_model(one.diagram);
  const auto& g = one.complex.generators;
  auto c = difference_class(one.diagram, m, connecting_loop(one.diagram, g[hft::gen(one, "X")], g[hft::gen(one, "F_2")]));
  o.need(m.orders == std::vector<std::int64_t>{0} && c.size() == 1 && (c[0] == 1 || c[0] == -1),
         "class of (X, F_2) generates Z");
  auto s1 = block_sizes(one);
  std::string found;
  for (auto s : s1) found += (found.empty() ? "" : "+") + std::to_string(s);
  o.need(s1 == std::vector<size_t>{6, 16}, "Basis I splits 6+16 (found " + found + ")");
  o.need(block_sizes(hft::report("s1s2_basisII")) == std::vector<size_t>{2, 6}, "Basis II splits 2+6");
  o.need(block_sizes(hft::report("s3_raw")) == std::vector<size_t>{29}, "S^3 has one block of 29");
  bool same = true;
  for (const auto& name : hft::open_book_fixtures()) {
    const auto& r = hft::report(name);
    for (const auto& [key, ws] : r.complex.witnesses) same = same && r.spinc.block_of[key.first] == r.spinc.block_of[key.second];
  }
  o.need(same, "witnesses join generators of one block");
  return o;
}

Outcome surgery() {
  Outcome o;
  auto p = hft::fixture("s1s2_surgery").surgery;
  o.need(h1_of_surgery(p).group == AbelianGroup{1, {}}, "H_1 = Z");
  o.need(c1_dual(p) == std::vector<std::int64_t>{0} && p.components[0].rot == 1 && p.components[1].rot == 2,
         "PD(c_1) = mu_1+2mu_2 = 0");
  o.need(spinc_determined_by_c1(h1_of_surgery(p).group), "s_xi determined by c_1");
  o.need(d3(SurgeryPresentation{}) == Rational(-1, 2), "d_3 of the empty presentation");
  o.need(d3(hft::fixture("s3_surgery").surgery) == Rational(1, 2), "d_3 of s3_surgery");
  return o;
}

Outcome properties() {
  Outcome o;
  for (const auto& name : hft::open_book_fixtures()) {
    const auto& r = hft::report(name);
    o.need(squares_to_zero(r.complex), name + ": d^2 = 0");
    bool agree = true;
    for (const auto& x : r.complex.generators)
      for (const auto& y : r.complex.generators) {
        std::set<std::vector<int>> a, b;
        for (const auto& d : find_polygons(r.diagram, x, y)) a.insert(d.coefficients);
        for (const auto& d : polygon_oracle(r.diagram, x, y)) b.insert(d.coefficients);
        agree = agree && a == b;
      }
    o.need(agree, name + ": outline search matches the oracle");
    auto n = nicen(r.diagram);
    o.need(n.moves.empty() && n.diagram == r.diagram, name + ": nicen is idempotent");
    auto hd = build_heegaard(to_open_book(hft::fixture(name)));
    bool kept = r.complex.generators[*r.contact].points == hd.contact.points;
    for (size_t v = 0; v < hd.diagram.vertices.size(); ++v) kept = kept && r.diagram.vertices[v] == hd.diagram.vertices[v];
    o.need(kept, name + ": nicening keeps X's vertices");
  }
  auto random = hft::random_nice_diagrams(2024, 40);
  o.need(random.size() >= 10, "enough random diagrams");
  for (const auto& d : random) {
    o.need(d.num_curves <= 3, "random diagrams have at most 3 curves");
    auto c = differential(d, enumerate_generators(d));
    o.need(squares_to_zero(c), "random diagram: d^2 = 0");
    auto n = nicen(d);
    o.need(n.moves.empty() && n.diagram == d, "random diagram: nicen is idempotent");
  }
  for (const char* name : {"s1s2_basisI_raw", "s1s2_basisII", "s1s2_basisIII"})
    o.need(hft::report(name).total.dimension == 2, std::string(name) + ": total 2");

  std::mt19937 rng(99);
  auto pages = hft::small_pages();
  std::vector<std::vector<CurvePath>> curves;
  for (const auto& s : pages) curves.push_back(hft::simple_curves(s, 3));
  int inverse_ok = 0;
  for (int it = 0; it < 100; ++it) {
    int p = static_cast<int>(rng() % pages.size());
    const auto& s = pages[p];
    TwistWord w;
    int len = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) w.push_back({curves[p][rng() % curves[p].size()], rng() % 2 ? 1 : -1});
    CurvePath path = cocore_arc(s, static_cast<int>(rng() % s.num_half_edges()));
    if (apply_twist(s, inverse(w), apply_twist(s, w, path)) == reduce(s, path)) ++inverse_ok;
  }
  o.need(inverse_ok == 100, "twist word inverse on 100 pairs");
  return o;
}

Outcome hopf() {
  Outcome o;
  auto ob = to_open_book(hft::fixture("hopf_s3"));
  o.need(ob.page.num_edges() == 1 && ob.page.num_boundary_components() == 2 && ob.page.genus() == 0, "annulus page");
  o.need(ob.monodromy.size() == 1 && ob.monodromy[0].sign == 1, "one positive twist");
  auto hd = build_heegaard(ob);
  const auto& d = hd.diagram;
  int chi = static_cast<int>(d.vertices.size()) - static_cast<int>(d.edges.size());
  for (const auto& r : regions(d)) chi += 2 - 2 * r.genus - r.boundary_components;
  o.need(d.num_curves == 1 && chi == 0 && validate(d), "genus 1 diagram");
  const auto& r = hft::report("hopf_s3");
  o.need(r.total.dimension == 1, "homology dimension 1");
  o.need(r.contact_status.nonzero, "contact class nonzero");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  auto* ef = app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"Basis II end-to-end", basis_two},  {"Basis I end-to-end", basis_one},
      {"Basis III end-to-end", basis_three}, {"overtwisted S^3 end-to-end", overtwisted},
      {"Spin^c", spinc},                   {"surgery", surgery},
      {"property suites", properties},     {"Hopf band", hopf},
  };
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.failed.push_back(std::string("exception: ") + e.what());
    }
    if (o.failed.empty()) {
      std::cout << "criterion " << id << " PASS: " << criteria[i].first << "\n";
    } else {
      failed.insert(id);
      std::cout << "criterion " << id << " FAIL: " << criteria[i].first << " [" << hft::join(o.failed) << "]\n";
    }
  }
  if (!ef->count()) return failed.empty() ? 0 : 1;
  std::set<int> want(expect_fail.begin(), expect_fail.end());
  if (failed == want) return 0;
  for (int id : failed)
    if (!want.count(id)) std::cout << "unexpected failure: criterion " << id << "\n";
  for (int id : want)
    if (!failed.count(id)) std::cout << "unexpected pass: criterion " << id << "\n";
  return 1;
}
