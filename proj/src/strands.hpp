#pragma once

// Chord model of curves on a page cut open along the co-cores of a
// one-vertex spine. The cut page is a disk whose boundary circle alternates
// "side h" (a copy of co-core h) and "corner h" (a boundary segment of the
// page). Every pass of a curve through the disk is a chord between two ports.

#include <optional>
#include <utility>
#include <vector>

#include "hfcontact/surface.hpp"

namespace hf::detail {

/// Contraction of a page onto a one-vertex spine by collapsing a spanning tree.
class SpineModel {
 public:
  SpineModel() = default;
  /// Collapse the edges in `tree` (must form a spanning tree).
  SpineModel(const PageSurface& s, std::vector<bool> tree_edges);
  /// Collapse a BFS spanning tree.
  static SpineModel bfs(const PageSurface& s);

  int num_loops() const { return static_cast<int>(order_.size()) / 2; }
  int circle_length() const { return 4 * num_loops(); }
  /// Rotation of non-tree half-edges at the contracted vertex.
  const std::vector<int>& order() const { return order_; }
  int pos(int h) const { return pos_[h]; }
  bool is_tree(int h) const { return tree_[h / 2]; }

  CurvePath contract(const CurvePath& p) const;
  CurvePath expand(const CurvePath& p) const;
  Endpoint contract(const Endpoint& e) const;
  Endpoint expand(const Endpoint& e) const;

 private:
  const PageSurface* surface_ = nullptr;
  std::vector<bool> tree_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<int> corner_to_;
  std::vector<long> corner_rank_;
  std::vector<int> parent_half_;  // half-edge from parent into vertex, -1 at root
  std::vector<int> depth_;
  std::vector<int> tree_path(int from, int to) const;
};

inline constexpr long kSlotShift = 1L << 24;

struct Port {
  bool corner = false;
  int h = 0;
  long slot = 0;
  int coord = 0;
};

struct Cursor {
  int curve = 0;
  int chord = 0;
  bool fwd = true;
};

/// A crossing point of curve `curve` through edge via exit index `index`.
struct Point {
  int curve = 0;
  int index = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Twist insertion produced for one chord of a curve crossing another.
struct ChordCrossing {
  int chord = 0;          // chord of the crossed curve
  bool left_to_right = false;
  long key_d = 0;
  long key_r = 0;
};

class StrandSet {
 public:
  StrandSet(const SpineModel& m, std::vector<CurvePath> curves);

  const CurvePath& curve(int c) const { return curves_[c]; }
  int num_curves() const { return static_cast<int>(curves_.size()); }
  int num_chords(int c) const;
  Port side_port(int h) const;
  Port corner_port(const Endpoint& e) const;
  Port chord_from(int c, int j) const;
  Port chord_to(int c, int j) const;
  Port from(const Cursor& u) const { return u.fwd ? chord_from(u.curve, u.chord) : chord_to(u.curve, u.chord); }
  Port to(const Cursor& u) const { return u.fwd ? chord_to(u.curve, u.chord) : chord_from(u.curve, u.chord); }
  std::optional<Cursor> step(const Cursor& u) const;
  int dist(const Port& a, const Port& b) const;

  /// Order along the common side that both cursors start from (counterclockwise
  /// coordinate on the circle): -1 if u precedes v, +1 if it follows, 0 if the
  /// strands never separate.
  int compare(Cursor u, Cursor v) const;

  /// Cursor leaving side `h` for the crossing point `pt` (which lies on h or its partner).
  Cursor cursor_at(const Point& pt, int h) const;

  /// Crossing points lying on side h belonging to the given curves, sorted
  /// counterclockwise by compare().
  std::vector<Point> sorted_points(int h, const std::vector<int>& curves) const;

  /// Crossings of chords of curve `crossed` by the strands of curve `other`,
  /// grouped per chord of `crossed` and ordered along it.
  std::vector<std::vector<ChordCrossing>> chord_crossings(int crossed, int other) const;

  /// Geometric intersection by linked pairs (independent of chord_crossings).
  int linked_pairs(int a, int b) const;

 private:
  const SpineModel& model_;
  std::vector<CurvePath> curves_;
};

}  // namespace hf::detail
