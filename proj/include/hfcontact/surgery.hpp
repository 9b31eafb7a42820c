#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfcontact/linalg.hpp"

namespace hf {

class UndefinedInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Legendrian knot with a contact (+1) or (-1) surgery coefficient.
struct SurgeryComponent {
  int tb = 0;
  int rot = 0;
  int coefficient = -1;
  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

struct SurgeryPresentation {
  std::vector<SurgeryComponent> components;
  std::vector<std::vector<int>> linking;  // symmetric, zero diagonal
  int size() const { return static_cast<int>(components.size()); }
  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

/// Throws std::invalid_argument on bad shapes, asymmetric linking or coefficients other than +-1.
void check(const SurgeryPresentation& p);

/// Smooth linking matrix: Q_ii = tb_i + c_i, Q_ij = lk_ij.
linalg::IntMat linking_matrix(const SurgeryPresentation& p);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // d_1 | d_2 | ..., each >= 2
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string str() const;
};

/// coker Q with its Smith data, so meridian classes can be reduced.
struct SurgeryH1 {
  AbelianGroup group;
  linalg::Smith smith;
  std::vector<int> kept;              // Smith rows that survive
  std::vector<std::int64_t> orders;   // 0 for free factors
  /// Class of sum v_i mu_i, entries aligned with `kept`.
  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& v) const;
};

SurgeryH1 h1_of_surgery(const SurgeryPresentation& p);

/// PD(c_1(xi)) = sum rot_i [mu_i] in Smith coordinates.
std::vector<std::int64_t> c1_dual(const SurgeryPresentation& p);
bool c1_is_torsion(const SurgeryPresentation& p);

bool spinc_determined_by_c1(const AbelianGroup& g);

/// Throws UndefinedInvariantError when c_1 is not torsion.
Rational d3(const SurgeryPresentation& p);

}  // namespace hf
