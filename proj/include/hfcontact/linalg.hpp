#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace hf {

/// Element of the field with two elements.
struct GF2 {
  bool v = false;
  GF2() = default;
  GF2(int x) : v(x & 1) {}  // NOLINT(google-explicit-constructor)
  friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v != b.v); }
  friend GF2 operator-(GF2 a, GF2 b) { return a + b; }
  friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v && b.v); }
  friend GF2 operator/(GF2 a, GF2) { return a; }
  GF2 operator-() const { return *this; }
  GF2& operator+=(GF2 b) { return *this = *this + b; }
  GF2& operator-=(GF2 b) { return *this = *this + b; }
  GF2& operator*=(GF2 b) { return *this = *this * b; }
  GF2& operator/=(GF2 b) { return *this = *this / b; }
  friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
  friend std::ostream& operator<<(std::ostream& os, GF2 a) { return os << int(a.v); }
};

using Rational = boost::rational<std::int64_t>;

}  // namespace hf

namespace Eigen {

template <>
struct NumTraits<hf::GF2> : GenericNumTraits<hf::GF2> {
  using Real = hf::GF2;
  using NonInteger = hf::GF2;
  using Nested = hf::GF2;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 0, RequireInitialization = 1, ReadCost = 1, AddCost = 1, MulCost = 1 };
  static hf::GF2 epsilon() { return hf::GF2(0); }
  static hf::GF2 dummy_precision() { return hf::GF2(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<hf::Rational> : GenericNumTraits<hf::Rational> {
  using Real = hf::Rational;
  using NonInteger = hf::Rational;
  using Nested = hf::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 3, MulCost = 3 };
  static hf::Rational epsilon() { return hf::Rational(0); }
  static hf::Rational dummy_precision() { return hf::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hf::linalg {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using IntMat = Mat<std::int64_t>;
using IntVec = Vec<std::int64_t>;

template <class S>
bool is_zero(const S& x) {
  return x == S(0);
}

/// Reduced row echelon form R of A together with an invertible T with T·A = R.
template <class S>
struct Echelon {
  Mat<S> R;
  Mat<S> T;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class S>
Echelon<S> row_echelon(const Mat<S>& A) {
  Echelon<S> e;
  e.R = A;
  e.T = Mat<S>::Identity(A.rows(), A.rows());
  int row = 0;
  for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < A.rows(); ++r)
      if (!is_zero(e.R(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    e.R.row(piv).swap(e.R.row(row));
    e.T.row(piv).swap(e.T.row(row));
    S inv = S(1) / e.R(row, col);
    e.R.row(row) *= inv;
    e.T.row(row) *= inv;
    for (int r = 0; r < A.rows(); ++r) {
      if (r == row || is_zero(e.R(r, col))) continue;
      S f = e.R(r, col);
      e.R.row(r) -= f * e.R.row(row);
      e.T.row(r) -= f * e.T.row(row);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <class S>
int rank(const Mat<S>& A) {
  return row_echelon(A).rank();
}

/// Basis of {x : A x = 0}, one vector per column.
template <class S>
Mat<S> kernel_basis(const Mat<S>& A) {
  auto e = row_echelon(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  Mat<S> K = Mat<S>::Zero(A.cols(), A.cols() - e.rank());
  int k = 0;
  for (int free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    K(free, k) = S(1);
    for (int r = 0; r < e.rank(); ++r) K(e.pivots[r], k) = -e.R(r, free);
    ++k;
  }
  return K;
}

/// Outcome of A x = b: a solution, or a functional w with wᵀA = 0 and wᵀb ≠ 0.
template <class S>
struct SolveResult {
  std::optional<Vec<S>> solution;
  Vec<S> obstruction;
};

template <class S>
SolveResult<S> solve(const Mat<S>& A, const Vec<S>& b) {
  auto e = row_echelon(A);
  Vec<S> tb = e.T * b;
  SolveResult<S> out;
  for (int r = e.rank(); r < A.rows(); ++r)
    if (!is_zero(tb(r))) {
      out.obstruction = e.T.row(r).transpose();
      return out;
    }
  Vec<S> x = Vec<S>::Zero(A.cols());
  for (int r = 0; r < e.rank(); ++r) x(e.pivots[r]) = tb(r);
  out.solution = x;
  return out;
}

/// U·A·V = D with D diagonal, d_1 | d_2 | ..., all d_i ≥ 0; U and V unimodular.
struct Smith {
  IntMat D;
  IntMat U;
  IntMat V;
  IntMat Vinv;
  IntMat Uinv;
  std::vector<std::int64_t> diagonal() const;
};

Smith smith_normal_form(const IntMat& A);

/// Signature of a symmetric rational matrix by exact congruence diagonalization.
int signature(const Mat<Rational>& Q);

}  // namespace hf::linalg
