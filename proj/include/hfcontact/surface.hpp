#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point on the boundary of a page, inside the boundary segment that follows
/// half-edge `corner` in the rotation at its vertex. `slot` orders several
/// endpoints sharing a corner (increasing in the boundary direction).
struct Endpoint {
  int corner = 0;
  long slot = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

enum class CurveKind { Arc, Closed };

/// Curve on a page recorded as the walk it traces on the ribbon graph spine.
/// `exits` lists the half-edges through which the curve leaves a vertex; each
/// traversal is one crossing with the co-core of that edge.
struct CurvePath {
  CurveKind kind = CurveKind::Arc;
  Endpoint start;
  Endpoint end;
  std::vector<int> exits;

  int length() const { return static_cast<int>(exits.size()); }
  friend bool operator==(const CurvePath&, const CurvePath&) = default;

  static CurvePath closed(std::vector<int> exits) {
    CurvePath p;
    p.kind = CurveKind::Closed;
    p.exits = std::move(exits);
    return p;
  }
  static CurvePath arc(Endpoint s, std::vector<int> exits, Endpoint e) {
    CurvePath p;
    p.kind = CurveKind::Arc;
    p.start = s;
    p.end = e;
    p.exits = std::move(exits);
    return p;
  }
};

struct Twist {
  CurvePath curve;
  int sign = 1;  // +1 right-handed
  friend bool operator==(const Twist&, const Twist&) = default;
};

using TwistWord = std::vector<Twist>;

TwistWord inverse(const TwistWord& word);

/// Compact oriented surface given as the thickening of a ribbon graph.
/// Half-edges of edge e are 2e and 2e+1; rotations list half-edges
/// counterclockwise around each vertex.
class PageSurface {
 public:
  PageSurface() = default;
  explicit PageSurface(std::vector<std::vector<int>> rotations);

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return num_edges_; }
  int num_half_edges() const { return 2 * num_edges_; }
  int num_boundary_components() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges_; }
  int genus() const { return (2 - euler_characteristic() - num_boundary_components()) / 2; }

  static int partner(int h) { return h ^ 1; }
  int vertex_of(int h) const { return vertex_[h]; }
  int position(int h) const { return position_[h]; }
  int next_ccw(int h) const;
  int prev_ccw(int h) const;
  /// Boundary component containing the corner after half-edge `h`.
  int boundary_of_corner(int h) const { return face_of_[partner(h)]; }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  /// Half-edge cycles of the boundary components (face permutation orbits).
  const std::vector<std::vector<int>>& boundary_cycles() const { return faces_; }

  /// Closed walk parallel to boundary component `b`.
  CurvePath boundary_curve(int b) const;

  /// Structural check of a walk; throws InvalidCurveError describing the problem.
  void check_path(const CurvePath& p) const;

  friend bool operator==(const PageSurface& a, const PageSurface& b) {
    return a.rotations_ == b.rotations_;
  }

 private:
  std::vector<std::vector<int>> rotations_;
  int num_edges_ = 0;
  std::vector<int> vertex_;
  std::vector<int> position_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
};

int euler_characteristic(const PageSurface& s);

/// Freely reduced representative; cyclically reduced for closed curves.
CurvePath reduce(const PageSurface& s, const CurvePath& p);

/// Reduction relative to a family of co-core arcs. Co-cores of spine edges are
/// the only arcs supported, so this coincides with reduce().
CurvePath reduce(const PageSurface& s, const CurvePath& p, const std::vector<int>& arc_edges);

/// Image of `path` under the composite of the word's twists, first entry first.
CurvePath apply_twist(const PageSurface& s, const TwistWord& word, const CurvePath& path);

/// Number of transverse intersections of two reduced curves in minimal position.
int geometric_intersection(const PageSurface& s, const CurvePath& a, const CurvePath& b);

/// Intersections of a curve with the co-core arc of edge `edge`.
int cocore_intersection(const CurvePath& p, int edge);

/// True when the curve has no self-intersection.
bool is_simple(const PageSurface& s, const CurvePath& p);

}  // namespace hf
