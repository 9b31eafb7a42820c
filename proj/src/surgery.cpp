#include "hfcontact/surgery.hpp"

#include <sstream>

namespace hf {

using I = std::int64_t;

void check(const SurgeryPresentation& p) {
  const int k = p.size();
  if (static_cast<int>(p.linking.size()) != k) throw std::invalid_argument("linking matrix must have one row per component");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(p.linking[i].size()) != k) throw std::invalid_argument("linking matrix row " + std::to_string(i) + " has the wrong length");
    if (p.linking[i][i] != 0) throw std::invalid_argument("linking matrix diagonal must be zero (framings come from tb)");
    for (int j = 0; j < k; ++j)
      if (p.linking[i][j] != p.linking[j][i])
        throw std::invalid_argument("linking matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int c = p.components[i].coefficient;
    if (c != 1 && c != -1) throw std::invalid_argument("contact coefficient of component " + std::to_string(i) + " must be +1 or -1");
  }
}

linalg::IntMat linking_matrix(const SurgeryPresentation& p) {
  check(p);
  const int k = p.size();
  linalg::IntMat Q(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) Q(i, j) = i == j ? p.components[i].tb + p.components[i].coefficient : p.linking[i][j];
  return Q;
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (I t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<I> SurgeryH1::reduce(const std::vector<I>& v) const {
  linalg::IntVec w(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) w(static_cast<int>(i)) = v[i];
  linalg::IntVec u = smith.U * w;
  std::vector<I> out;
  for (size_t k = 0; k < kept.size(); ++k) {
    I x = u(kept[k]);
    if (orders[k] != 0) x = ((x % orders[k]) + orders[k]) % orders[k];
    out.push_back(x);
  }
  return out;
}

SurgeryH1 h1_of_surgery(const SurgeryPresentation& p) {
  SurgeryH1 h;
  h.smith = linalg::smith_normal_form(linking_matrix(p));
  auto diag = h.smith.diagonal();
  for (int i = 0; i < p.size(); ++i) {
    I d = i < static_cast<int>(diag.size()) ? diag[i] : 0;
    if (d == 1) continue;
    h.kept.push_back(i);
    h.orders.push_back(d);
    if (d == 0)
      ++h.group.free_rank;
    else
      h.group.torsion.push_back(d);
  }
  return h;
}

namespace {
std::vector<I> rotations(const SurgeryPresentation& p) {
  std::vector<I> rot;
  for (const auto& c : p.components) rot.push_back(c.rot);
  return rot;
}
}  // namespace

std::vector<I> c1_dual(const SurgeryPresentation& p) { return h1_of_surgery(p).reduce(rotations(p)); }

bool c1_is_torsion(const SurgeryPresentation& p) {
  auto h = h1_of_surgery(p);
  auto c = h.reduce(rotations(p));
  for (size_t k = 0; k < c.size(); ++k)
    if (h.orders[k] == 0 && c[k] != 0) return false;
  return true;
}

bool spinc_determined_by_c1(const AbelianGroup& g) {
  for (I t : g.torsion)
    if (t % 2 == 0) return false;
  return true;
}

Rational d3(const SurgeryPresentation& p) {
  const int k = p.size();
  auto Qi = linking_matrix(p);
  if (!c1_is_torsion(p)) throw UndefinedInvariantError("d3 is undefined: c1 is not torsion");
  linalg::Mat<Rational> Q(k, k);
  linalg::Vec<Rational> rot(k);
  for (int i = 0; i < k; ++i) {
    rot(i) = Rational(p.components[i].rot);
    for (int j = 0; j < k; ++j) Q(i, j) = Rational(Qi(i, j));
  }
  Rational c2(0);
  if (k > 0) {
    auto s = linalg::solve(Q, rot);
    if (!s.solution) throw UndefinedInvariantError("d3 is undefined: rotation vector is outside the column space of Q");
    const auto& v = *s.solution;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c2 += v(i) * Q(i, j) * v(j);
  }
  int sigma = k > 0 ? linalg::signature(Q) : 0;
  int chi = 1 + k;
  int q = 0;
  for (const auto& c : p.components)
    if (c.coefficient == 1) ++q;
  return (c2 - Rational(3 * sigma) - Rational(2 * chi)) / Rational(4) + Rational(q);
}

}  // namespace hf
