#include <random>
#include <set>

#include "doctest.h"
#include "hfcontact/linalg.hpp"

using namespace hf;
using namespace hf::linalg;

namespace {

Mat<GF2> gf2(const std::vector<std::vector<int>>& rows) {
  Mat<GF2> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = GF2(rows[i][j]);
  return m;
}

IntMat ints(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool zero(const Mat<GF2>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != GF2(0)) return false;
  return true;
}

// Rank over GF(2) by brute force: the span has 2^rank elements.
int span_rank(const Mat<GF2>& A) {
  std::set<std::vector<int>> span;
  const int n = static_cast<int>(A.cols());
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> v(A.rows(), 0);
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1)
        for (int i = 0; i < A.rows(); ++i) v[i] ^= A(i, j).v;
    span.insert(v);
  }
  int r = 0;
  while ((1UL << r) < span.size()) ++r;
  return r;
}

// Cofactor expansion; fine for the small sizes used here.
std::int64_t det(const IntMat& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 1) return m(0, 0);
  std::int64_t d = 0;
  for (int c = 0; c < n; ++c) {
    IntMat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    d += (c % 2 ? -1 : 1) * m(0, c) * det(minor);
  }
  return d;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("GF(2) rank and kernel") {
    auto A = gf2({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(A) == 2);
    auto K = kernel_basis(A);
    REQUIRE(K.cols() == 1);
    CHECK(zero(A * K));
  }

  TEST_CASE("GF(2) rank agrees with span enumeration") {
    std::mt19937 rng(9);
    for (int it = 0; it < 200; ++it) {
      int r = 1 + rng() % 6, c = 1 + rng() % 6;
      Mat<GF2> A(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A(i, j) = GF2(static_cast<int>(rng() % 2));
      CHECK(rank(A) == span_rank(A));
      auto K = kernel_basis(A);
      CHECK(K.cols() == c - rank(A));
      CHECK(zero(A * K));
    }
  }

  TEST_CASE("solve returns a solution or an obstruction") {
    auto A = gf2({{1, 1}, {1, 1}});
    Vec<GF2> b(2);
    b << GF2(1), GF2(0);
    auto r = solve(A, b);
    REQUIRE_FALSE(r.solution);
    CHECK(zero(r.obstruction.transpose() * A));
    CHECK((r.obstruction.transpose() * b)(0) == GF2(1));
    b << GF2(1), GF2(1);
    auto s = solve(A, b);
    REQUIRE(s.solution);
    CHECK(A * *s.solution == b);
  }

  TEST_CASE("Smith normal form of hand-checked matrices") {
    auto A = ints({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto s = smith_normal_form(A);
    CHECK(s.diagonal() == std::vector<std::int64_t>{2, 6, 12});
    CHECK(s.U * A * s.V == s.D);
    CHECK(s.V * s.Vinv == IntMat::Identity(3, 3));
    CHECK(s.U * s.Uinv == IntMat::Identity(3, 3));

    auto B = ints({{-1, -2}, {-2, -4}});
    CHECK(smith_normal_form(B).diagonal() == std::vector<std::int64_t>{1, 0});
    auto C = ints({{-2}});
    CHECK(smith_normal_form(C).diagonal() == std::vector<std::int64_t>{2});
  }

  TEST_CASE("Smith normal form on random integer matrices") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
      int n = 1 + rng() % 4;
      IntMat A(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = static_cast<int>(rng() % 11) - 5;
      auto s = smith_normal_form(A);
      CHECK(s.U * A * s.V == s.D);
      auto d = s.diagonal();
      for (size_t k = 0; k + 1 < d.size(); ++k)
        if (d[k + 1] != 0) CHECK(d[k + 1] % d[k] == 0);
      std::int64_t prod = 1;
      for (auto x : d) prod *= x;
      CHECK(std::abs(det(A)) == prod);
    }
  }

  TEST_CASE("signature") {
    Mat<Rational> Q(2, 2);
    Q << Rational(-1), Rational(1), Rational(1), Rational(-2);
    CHECK(signature(Q) == -2);
    Q << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK(signature(Q) == 0);
    Q << Rational(-1), Rational(-2), Rational(-2), Rational(-4);
    CHECK(signature(Q) == -1);
  }
}
