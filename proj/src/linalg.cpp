#include "hfcontact/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace hf::linalg {

namespace {

using I = std::int64_t;

struct SmithState {
  IntMat D, U, Uinv, V, Vinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    D.row(i).swap(D.row(j));
    U.row(i).swap(U.row(j));
    Uinv.col(i).swap(Uinv.col(j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    D.col(i).swap(D.col(j));
    V.col(i).swap(V.col(j));
    Vinv.row(i).swap(Vinv.row(j));
  }
  // row_i += q * row_j
  void add_row(int i, int j, I q) {
    D.row(i) += q * D.row(j);
    U.row(i) += q * U.row(j);
    Uinv.col(j) -= q * Uinv.col(i);
  }
  // col_i += q * col_j
  void add_col(int i, int j, I q) {
    D.col(i) += q * D.col(j);
    V.col(i) += q * V.col(j);
    Vinv.row(j) -= q * Vinv.row(i);
  }
  void negate_row(int i) {
    D.row(i) *= -1;
    U.row(i) *= -1;
    Uinv.col(i) *= -1;
  }
};

I floor_div(I a, I b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<std::int64_t> Smith::diagonal() const {
  std::vector<std::int64_t> d;
  for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

Smith smith_normal_form(const IntMat& A) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  SmithState s{A, IntMat::Identity(m, m), IntMat::Identity(m, m), IntMat::Identity(n, n), IntMat::Identity(n, n)};
  for (int t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block moves to (t, t)
      int pi = -1, pj = -1;
      I best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (s.D(i, j) != 0 && (pi < 0 || std::llabs(s.D(i, j)) < best)) {
            best = std::llabs(s.D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (s.D(i, t) == 0) continue;
        s.add_row(i, t, -floor_div(s.D(i, t), s.D(t, t)));
        if (s.D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (s.D(t, j) == 0) continue;
        s.add_col(j, t, -floor_div(s.D(t, j), s.D(t, t)));
        if (s.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (s.D(i, j) % s.D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.add_row(t, bad, 1);
    }
    if (s.D(t, t) < 0) s.negate_row(t);
  }
  return {s.D, s.U, s.V, s.Vinv, s.Uinv};
}

int signature(const Mat<Rational>& Q0) {
  Mat<Rational> Q = Q0;
  const int n = static_cast<int>(Q.rows());
  int sig = 0;
  for (int k = 0; k < n; ++k) {
    if (Q(k, k) == Rational(0)) {
      int j = -1;
      for (int c = k + 1; c < n; ++c)
        if (Q(c, c) != Rational(0)) {
          j = c;
          break;
        }
      if (j >= 0) {
        Q.row(k).swap(Q.row(j));
        Q.col(k).swap(Q.col(j));
      } else {
        for (int c = k + 1; c < n; ++c)
          if (Q(k, c) != Rational(0)) {
            j = c;
            break;
          }
        if (j < 0) continue;
        Q.row(k) += Q.row(j);
        Q.col(k) += Q.col(j);
      }
    }
    Rational p = Q(k, k);
    for (int r = k + 1; r < n; ++r) {
      if (Q(r, k) == Rational(0)) continue;
      Rational f = Q(r, k) / p;
      Q.row(r) -= f * Q.row(k);
      Q.col(r) -= f * Q.col(k);
    }
    sig += p > Rational(0) ? 1 : -1;
  }
  return sig;
}

}  // namespace hf::linalg
