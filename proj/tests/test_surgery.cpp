#include <Eigen/Dense>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hfcontact/surgery.hpp"
#include "support.hpp"

using namespace hf;

namespace {

SurgeryPresentation knot(int tb, int rot, int c) { return {{{tb, rot, c}}, {{0}}}; }

// Floating point evaluation through eigenvalues, for nonsingular Q.
double d3_by_eigenvalues(const SurgeryPresentation& p) {
  const int k = p.size();
  Eigen::MatrixXd Q(k, k);
  Eigen::VectorXd rot(k);
  for (int i = 0; i < k; ++i) {
    rot(i) = p.components[i].rot;
    for (int j = 0; j < k; ++j) Q(i, j) = i == j ? p.components[i].tb + p.components[i].coefficient : p.linking[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
  int sigma = 0;
  for (int i = 0; i < k; ++i) sigma += es.eigenvalues()(i) > 0 ? 1 : -1;
  double c2 = rot.dot(Q.fullPivLu().solve(rot));
  int q = 0;
  for (const auto& c : p.components) q += c.coefficient == 1;
  return (c2 - 3 * sigma - 2 * (1 + k)) / 4 + q;
}

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

std::int64_t element_order(const SurgeryH1& h, const std::vector<std::int64_t>& x) {
  std::int64_t ord = 1;
  for (size_t i = 0; i < x.size(); ++i) {
    if (h.orders[i] == 0) {
      if (x[i] != 0) return 0;
      continue;
    }
    std::int64_t o = h.orders[i] / std::gcd(h.orders[i], x[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

SurgeryPresentation random_presentation(std::mt19937& rng) {
  SurgeryPresentation p;
  int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    int tb = -4 + static_cast<int>(rng() % 5);
    int rot = static_cast<int>(rng() % 5) - 2;
    if ((tb + rot) % 2 == 0) rot += 1;  // tb + rot is odd for Legendrian knots
    p.components.push_back({tb, rot, rng() % 2 ? 1 : -1});
  }
  p.linking.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) p.linking[i][j] = p.linking[j][i] = static_cast<int>(rng() % 5) - 2;
  return p;
}

SurgeryPresentation permuted(const SurgeryPresentation& p, const std::vector<int>& perm) {
  SurgeryPresentation q = p;
  const int k = p.size();
  for (int i = 0; i < k; ++i) {
    q.components[i] = p.components[perm[i]];
    for (int j = 0; j < k; ++j) q.linking[i][j] = p.linking[perm[i]][perm[j]];
  }
  return q;
}

SurgeryPresentation flipped(const SurgeryPresentation& p, int i) {
  SurgeryPresentation q = p;
  q.components[i].rot = -q.components[i].rot;
  for (int j = 0; j < p.size(); ++j) {
    q.linking[i][j] = -q.linking[i][j];
    q.linking[j][i] = -q.linking[j][i];
  }
  return q;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("first homology") {
    auto s1s2 = hft::fixture("s1s2_surgery").surgery;
    CHECK(h1_of_surgery(s1s2).group == AbelianGroup{1, {}});
    CHECK(h1_of_surgery(s1s2).group.str() == "Z");
    CHECK(h1_of_surgery(SurgeryPresentation{}).group == AbelianGroup{0, {}});
    CHECK(h1_of_surgery(SurgeryPresentation{}).group.str() == "0");
    CHECK(h1_of_surgery(knot(-1, 0, -1)).group == AbelianGroup{0, {2}});
    CHECK(h1_of_surgery(hft::fixture("s3_surgery").surgery).group == AbelianGroup{0, {}});
    CHECK(AbelianGroup{1, {3}}.str() == "Z/3 + Z");
  }

  TEST_CASE("linking matrix uses tb plus the contact coefficient") {
    auto Q = linking_matrix(hft::fixture("s1s2_surgery").surgery);
    CHECK(Q(0, 0) == -1);
    CHECK(Q(1, 1) == -4);
    CHECK(Q(0, 1) == -2);
    CHECK(Q(1, 0) == -2);
  }

  TEST_CASE("Poincare dual of c_1") {
    auto s1s2 = hft::fixture("s1s2_surgery").surgery;
    CHECK(c1_dual(s1s2) == std::vector<std::int64_t>{0});
    CHECK(c1_is_torsion(s1s2));

    auto flat = s1s2;
    for (auto& c : flat.components) c.rot = 0;
    CHECK(c1_dual(flat) == std::vector<std::int64_t>{0});

    auto three = knot(-2, 1, -1);
    auto h = h1_of_surgery(three);
    REQUIRE(h.group == AbelianGroup{0, {3}});
    auto c = c1_dual(three);
    REQUIRE(c.size() == 1);
    CHECK(element_order(h, c) == 3);

    auto twisted = s1s2;
    twisted.components[0].rot = 3;
    CHECK_FALSE(c1_is_torsion(twisted));
  }

  TEST_CASE("Spin^c structures and 2-torsion") {
    CHECK(spinc_determined_by_c1(AbelianGroup{1, {}}));
    CHECK_FALSE(spinc_determined_by_c1(AbelianGroup{0, {2}}));
    CHECK(spinc_determined_by_c1(AbelianGroup{1, {3}}));
    CHECK_FALSE(spinc_determined_by_c1(AbelianGroup{0, {3, 6}}));
    CHECK(spinc_determined_by_c1(h1_of_surgery(hft::fixture("s1s2_surgery").surgery).group));
  }

  TEST_CASE("d_3") {
    CHECK(d3(SurgeryPresentation{}) == Rational(-1, 2));
    CHECK(d3(hft::fixture("s3_surgery").surgery) == Rational(1, 2));
    CHECK(d3(knot(-1, 0, -1)) == Rational(-1, 4));
    CHECK(d3(hft::fixture("s1s2_surgery").surgery) == Rational(0));
  }

  TEST_CASE("d_3 agrees with a floating point evaluation") {
    std::mt19937 rng(12);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
      auto p = random_presentation(rng);
      auto Q = linking_matrix(p);
      Eigen::MatrixXd Qd = Q.cast<double>();
      if (std::abs(Qd.determinant()) < 0.5) continue;
      CHECK(to_double(d3(p)) == doctest::Approx(d3_by_eigenvalues(p)));
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("reordering components changes nothing") {
    std::mt19937 rng(31);
    for (int it = 0; it < 100; ++it) {
      auto p = random_presentation(rng);
      std::vector<int> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto q = permuted(p, perm);
      auto hp = h1_of_surgery(p), hq = h1_of_surgery(q);
      CHECK(hp.group == hq.group);
      CHECK(c1_is_torsion(p) == c1_is_torsion(q));
      CHECK(element_order(hp, c1_dual(p)) == element_order(hq, c1_dual(q)));
      if (c1_is_torsion(p)) CHECK(d3(p) == d3(q));
    }
  }

  TEST_CASE("reversing a component preserves d_3 and the class of c_1") {
    std::mt19937 rng(77);
    for (int it = 0; it < 100; ++it) {
      auto p = random_presentation(rng);
      int i = static_cast<int>(rng() % p.size());
      auto q = flipped(p, i);
      auto hp = h1_of_surgery(p), hq = h1_of_surgery(q);
      CHECK(hp.group == hq.group);
      CHECK(c1_is_torsion(p) == c1_is_torsion(q));
      CHECK(element_order(hp, c1_dual(p)) == element_order(hq, c1_dual(q)));
      // meridian i reverses too, so the same class is rot_i' mu_i' = rot_i mu_i
      std::vector<std::int64_t> neg(p.size());
      for (int j = 0; j < p.size(); ++j) neg[j] = -p.components[j].rot;
      CHECK(element_order(hp, hp.reduce(neg)) == element_order(hp, c1_dual(p)));
      if (c1_is_torsion(p)) CHECK(d3(p) == d3(q));
    }
  }

  TEST_CASE("bad presentations") {
    SurgeryPresentation p{{{-1, 0, -1}, {-1, 0, -1}}, {{0, 1}, {2, 0}}};
    CHECK_THROWS_AS(check(p), std::invalid_argument);
    p.linking = {{0, 1}};
    CHECK_THROWS_AS(check(p), std::invalid_argument);
    p.linking = {{1, 1}, {1, 0}};
    CHECK_THROWS_AS(check(p), std::invalid_argument);
    p.linking = {{0, 1}, {1, 0}};
    CHECK_NOTHROW(check(p));
    p.components[0].coefficient = 2;
    CHECK_THROWS_AS(check(p), std::invalid_argument);

    auto free = hft::fixture("s1s2_surgery").surgery;
    free.components[1].rot = 1;
    CHECK_THROWS_AS(d3(free), UndefinedInvariantError);
  }
}
