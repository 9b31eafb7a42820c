#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "hfcontact/openbook.hpp"
#include "hfcontact/pipeline.hpp"

namespace hft {

inline hf::Document fixture(const std::string& name) { return hf::parse_document(hf::fixture_text(name), name); }

inline const hf::Report& report(const std::string& name) {
  static std::map<std::string, hf::Report> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, hf::run_pipeline(fixture(name))).first;
  return it->second;
}

inline int gen(const hf::Report& r, const std::string& name) {
  auto it = std::find(r.generator_names.begin(), r.generator_names.end(), name);
  if (it == r.generator_names.end()) throw std::out_of_range("no generator " + name);
  return static_cast<int>(it - r.generator_names.begin());
}

inline int region(const hf::Report& r, const std::string& label) {
  auto it = std::find(r.region_labels.begin(), r.region_labels.end(), label);
  if (it == r.region_labels.end()) throw std::out_of_range("no region " + label);
  return static_cast<int>(it - r.region_labels.begin());
}

/// Domain strings of all witnesses from one generator to another.
inline std::vector<std::string> witnesses(const hf::Report& r, const std::string& from, const std::string& to) {
  std::vector<std::string> out;
  auto it = r.complex.witnesses.find({gen(r, from), gen(r, to)});
  if (it != r.complex.witnesses.end())
    for (const auto& w : it->second) out.push_back(hf::domain_string(r, w));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> boundary(const hf::Report& r, const std::string& from) {
  std::vector<std::string> out;
  int i = gen(r, from);
  for (int j = 0; j < r.complex.size(); ++j)
    if (r.complex.boundary(j, i) == hf::GF2(1)) out.push_back(r.generator_names[j]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<std::string> block_names(const hf::Report& r, int b) {
  std::vector<std::string> out;
  for (int g : r.spinc.blocks[b]) out.push_back(r.generator_names[g]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> open_book_fixtures() {
  return {"s1s2_basisI_raw", "s1s2_basisII", "s1s2_basisIII", "s3_raw", "hopf_s3"};
}

inline hf::OpenBook basis_open_book(const hf::PageSurface& s, hf::TwistWord w = {}) {
  std::vector<hf::CurvePath> arcs;
  for (int e = 0; e < s.num_edges(); ++e) arcs.push_back(hf::cocore_arc(s, 2 * e));
  return {s, arcs, std::move(w)};
}

/// Reduced closed walks of length at most `max_len` that are simple.
inline std::vector<hf::CurvePath> simple_curves(const hf::PageSurface& s, int max_len) {
  std::vector<hf::CurvePath> out;
  std::set<std::vector<int>> seen;
  const int H = s.num_half_edges();
  std::vector<int> w;
  std::function<void()> grow = [&] {
    if (!w.empty() && s.vertex_of(w.front()) == s.vertex_of(w.back() ^ 1)) {
      try {
        auto c = hf::reduce(s, hf::CurvePath::closed(w));
        if (c.length() == static_cast<int>(w.size()) && seen.insert(c.exits).second && hf::is_simple(s, c)) out.push_back(c);
      } catch (const hf::InvalidCurveError&) {
      }
    }
    if (static_cast<int>(w.size()) >= max_len) return;
    for (int h = 0; h < H; ++h) {
      if (!w.empty() && (s.vertex_of(h) != s.vertex_of(w.back() ^ 1) || h == (w.back() ^ 1))) continue;
      w.push_back(h);
      grow();
      w.pop_back();
    }
  };
  grow();
  return out;
}

/// Pages with at most three spine edges, so their diagrams carry at most three curves of each family.
inline std::vector<hf::PageSurface> small_pages() {
  return {hf::PageSurface({{0, 1}}),          hf::PageSurface({{0, 2, 1, 3}}),       hf::PageSurface({{0, 1, 2, 3}}),
          hf::PageSurface({{0, 1, 2, 4, 5, 3}}), hf::PageSurface({{0, 1, 2, 3, 4, 5}}), hf::PageSurface({{0, 2, 1, 3, 4, 5}})};
}

/// Nice diagrams from random open books on small pages; tries `attempts` words.
inline std::vector<hf::HeegaardDiagram> random_nice_diagrams(unsigned seed, int attempts) {
  std::mt19937 rng(seed);
  std::vector<hf::HeegaardDiagram> out;
  auto pages = small_pages();
  std::vector<std::vector<hf::CurvePath>> curves;
  for (const auto& s : pages) curves.push_back(simple_curves(s, 3));
  for (int it = 0; it < attempts; ++it) {
    int p = static_cast<int>(rng() % pages.size());
    hf::TwistWord w;
    int len = static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) w.push_back({curves[p][rng() % curves[p].size()], rng() % 2 ? 1 : -1});
    try {
      auto hd = hf::build_heegaard(basis_open_book(pages[p], w));
      auto n = hf::nicen(hd.diagram, 12);
      auto d = hf::canonicalize_regions(n.diagram);
      if (hf::enumerate_generators(d).size() > 60 || d.regions.size() > 16) continue;
      out.push_back(d);
    } catch (const hf::BudgetExceededError&) {
    }
  }
  return out;
}

}  // namespace hft
