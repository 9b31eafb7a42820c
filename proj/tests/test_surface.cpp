#include <random>

#include "doctest.h"
#include "hfcontact/openbook.hpp"
#include "hfcontact/surface.hpp"
#include "support.hpp"

using namespace hf;

TEST_SUITE("surface") {
  TEST_CASE("euler characteristic of standard pages") {
    PageSurface annulus({{0, 1}});
    CHECK(euler_characteristic(annulus) == 0);
    CHECK(annulus.num_boundary_components() == 2);
    CHECK(annulus.genus() == 0);

    PageSurface sphere4({{0, 1, 2, 4, 5, 3}});
    CHECK(euler_characteristic(sphere4) == -2);
    CHECK(sphere4.num_boundary_components() == 4);
    CHECK(sphere4.genus() == 0);

    PageSurface torus1({{0, 2, 1, 3}});
    CHECK(euler_characteristic(torus1) == -1);
    CHECK(torus1.num_boundary_components() == 1);
    CHECK(torus1.genus() == 1);

    for (const auto& s : hft::small_pages())
      CHECK(euler_characteristic(s) == 2 - 2 * s.genus() - s.num_boundary_components());
  }

  TEST_CASE("malformed rotation systems are rejected") {
    CHECK_THROWS_AS(PageSurface({{0, 1, 2}}), StructureError);
    CHECK_THROWS_AS(PageSurface({{0, 0, 1}}), StructureError);
    CHECK_THROWS_AS(PageSurface({{0, 1}, {2, 3}}), StructureError);  // disconnected
    CHECK_THROWS_AS(PageSurface({{0, -1}}), StructureError);
  }

  TEST_CASE("twist about the annulus core") {
    PageSurface s({{0, 1}});
    CurvePath a = cocore_arc(s, 0);
    CurvePath core = CurvePath::closed({0});
    TwistWord w{{core, 1}};
    CurvePath t = apply_twist(s, w, a);
    CHECK(geometric_intersection(s, t, a) == 1);
    CHECK(geometric_intersection(s, t, core) == 1);
    CurvePath back = apply_twist(s, inverse(w), t);
    CHECK(geometric_intersection(s, back, a) == 0);
    CHECK(back == reduce(s, a));
  }

  TEST_CASE("twist about a disjoint curve leaves a path alone") {
    PageSurface s({{0, 1, 2, 4, 5, 3}});
    CurvePath a = cocore_arc(s, 0);
    int disjoint = 0;
    for (const auto& c : hft::simple_curves(s, 4)) {
      if (geometric_intersection(s, c, a) != 0) continue;
      ++disjoint;
      CHECK(apply_twist(s, {{c, 1}}, a) == reduce(s, a));
      CHECK(apply_twist(s, {{c, -1}}, a) == reduce(s, a));
    }
    CHECK(disjoint > 0);
  }

  TEST_CASE("reduce removes cancelling crossings and is idempotent") {
    PageSurface s({{0, 1, 2, 4, 5, 3}});
    CurvePath p = CurvePath::closed({0, 2});
    CHECK(reduce(s, p) == reduce(s, reduce(s, p)));
    CurvePath padded = CurvePath::closed({0, 4, 5, 2});
    CHECK(reduce(s, padded).length() == 2);
    CHECK(reduce(s, padded) == reduce(s, p));
    CHECK(reduce(s, p, {0, 1, 2}) == reduce(s, p));
  }

  TEST_CASE("reduce after random words is idempotent") {
    std::mt19937 rng(3);
    for (const auto& s : hft::small_pages()) {
      auto curves = hft::simple_curves(s, 3);
      for (int it = 0; it < 20; ++it) {
        TwistWord w;
        for (int k = 0; k < 3; ++k) w.push_back({curves[rng() % curves.size()], rng() % 2 ? 1 : -1});
        auto q = apply_twist(s, w, cocore_arc(s, static_cast<int>(rng() % s.num_half_edges())));
        CHECK(reduce(s, q) == q);
        CHECK(reduce(s, reduce(s, q)) == reduce(s, q));
      }
    }
  }

  TEST_CASE("intersection numbers of basic arcs") {
    PageSurface s({{0, 1, 2, 4, 5, 3}});
    CHECK(geometric_intersection(s, cocore_arc(s, 0), cocore_arc(s, 2)) == 0);
    for (int h : {0, 2, 4}) CHECK(geometric_intersection(s, cocore_arc(s, h), push_off(s, cocore_arc(s, h))) == 1);
  }

  TEST_CASE("curves from another page are a mismatch") {
    PageSurface small({{0, 1}});
    PageSurface big({{0, 1, 2, 4, 5, 3}});
    CHECK_THROWS_AS(geometric_intersection(small, cocore_arc(small, 0), cocore_arc(big, 4)), MismatchError);
  }

  TEST_CASE("twisting by a non-simple curve is refused") {
    PageSurface s({{0, 1, 2, 4, 5, 3}});
    CurvePath bad = CurvePath::closed({0, 0});
    REQUIRE_FALSE(is_simple(s, reduce(s, bad)));
    CHECK_THROWS_AS(apply_twist(s, {{bad, 1}}, cocore_arc(s, 0)), InvalidCurveError);
  }

  TEST_CASE("word followed by its inverse is the identity on 100 random pairs") {
    std::mt19937 rng(2024);
    auto pages = hft::small_pages();
    std::vector<std::vector<CurvePath>> curves;
    for (const auto& s : pages) curves.push_back(hft::simple_curves(s, 3));
    int checked = 0;
    for (int it = 0; it < 100; ++it) {
      int p = static_cast<int>(rng() % pages.size());
      const auto& s = pages[p];
      TwistWord w;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k) w.push_back({curves[p][rng() % curves[p].size()], rng() % 2 ? 1 : -1});
      CurvePath path = rng() % 2 ? cocore_arc(s, static_cast<int>(rng() % s.num_half_edges())) : curves[p][rng() % curves[p].size()];
      CurvePath image = apply_twist(s, w, path);
      CHECK(apply_twist(s, inverse(w), image) == reduce(s, path));
      CHECK(reduce(s, apply_twist(s, w, apply_twist(s, inverse(w), path))) == reduce(s, path));
      if (path.kind == CurveKind::Arc) {
        CHECK(s.boundary_of_corner(image.start.corner) == s.boundary_of_corner(path.start.corner));
        CHECK(s.boundary_of_corner(image.end.corner) == s.boundary_of_corner(path.end.corner));
      }
      ++checked;
    }
    CHECK(checked == 100);
  }

  TEST_CASE("twists about disjoint curves commute") {
    std::mt19937 rng(5);
    PageSurface s({{0, 1, 2, 4, 5, 3}});
    auto curves = hft::simple_curves(s, 3);
    int pairs = 0;
    for (size_t i = 0; i < curves.size(); ++i)
      for (size_t j = i + 1; j < curves.size(); ++j) {
        if (geometric_intersection(s, curves[i], curves[j]) != 0) continue;
        ++pairs;
        for (int h = 0; h < s.num_half_edges(); ++h) {
          CurvePath a = cocore_arc(s, h);
          int si = rng() % 2 ? 1 : -1, sj = rng() % 2 ? 1 : -1;
          CHECK(apply_twist(s, {{curves[i], si}, {curves[j], sj}}, a) == apply_twist(s, {{curves[j], sj}, {curves[i], si}}, a));
        }
      }
    CHECK(pairs > 0);
  }
}
