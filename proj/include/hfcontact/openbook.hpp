#pragma once

#include <stdexcept>
#include <vector>

#include "hfcontact/diagram.hpp"
#include "hfcontact/surface.hpp"

namespace hf {

class InvalidBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Abstract open book. Basis arcs are co-cores of page edges (see cocore_arc).
struct OpenBook {
  PageSurface page;
  std::vector<CurvePath> basis;
  TwistWord monodromy;
};

/// Co-core of the edge of `h`, running across the vertex of h from the corner
/// before h to the corner after h.
CurvePath cocore_arc(const PageSurface& s, int h);

/// Half-edge whose co-core the arc is; throws InvalidCurveError for other arcs.
int cocore_half_edge(const PageSurface& s, const CurvePath& a);

bool validate_basis(const PageSurface& s, const std::vector<CurvePath>& arcs);

/// Push-off with endpoints moved forward along the boundary.
CurvePath push_off(const PageSurface& s, const CurvePath& a);

/// One intersection point x_i of alpha_i and beta_i per basis arc (vertex ids).
struct ContactGenerator {
  std::vector<int> points;
  friend bool operator==(const ContactGenerator&, const ContactGenerator&) = default;
};

struct HeegaardData {
  HeegaardDiagram diagram;
  ContactGenerator contact;
};

/// Heegaard diagram (Sigma, beta, alpha, z) of -Y for the open book.
HeegaardData build_heegaard(const OpenBook& ob);

}  // namespace hf
