#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

enum class Family : int { Alpha = 0, Beta = 1 };

inline const char* family_name(Family f) { return f == Family::Alpha ? "alpha" : "beta"; }

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transverse intersection of alpha curve `alpha` with beta curve `beta`.
/// `side` records the half of the Heegaard surface it came from
/// (1 for S_{1/2}, 0 for S_0, -1 when unknown).
struct DiagramVertex {
  int alpha = -1;
  int beta = -1;
  int side = -1;
  friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

/// Segment of a curve between two consecutive intersection points, oriented
/// along the curve. Edge e carries darts 2e (along) and 2e+1 (against).
struct DiagramEdge {
  Family family = Family::Alpha;
  int curve = 0;
  int tail = 0;
  int head = 0;
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Component of the complement of the curves. Each boundary cycle lists
/// darts with the region on their left.
struct DiagramRegion {
  std::vector<std::vector<int>> boundary;
  int genus = 0;
  friend bool operator==(const DiagramRegion&, const DiagramRegion&) = default;
};

struct HeegaardDiagram {
  int num_curves = 0;  // per family
  std::vector<DiagramVertex> vertices;
  std::vector<DiagramEdge> edges;
  std::vector<DiagramRegion> regions;
  int basepoint = 0;

  int num_darts() const { return 2 * static_cast<int>(edges.size()); }
  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int tail(int d) const { return d & 1 ? edges[d >> 1].head : edges[d >> 1].tail; }
  int head(int d) const { return d & 1 ? edges[d >> 1].tail : edges[d >> 1].head; }
  Family family(int d) const { return edges[d >> 1].family; }
  int curve(int d) const { return edges[d >> 1].curve; }

  friend bool operator==(const HeegaardDiagram&, const HeegaardDiagram&) = default;
};

/// Navigation tables derived from the region boundaries.
class DiagramIndex {
 public:
  explicit DiagramIndex(const HeegaardDiagram& d);

  int left_region(int dart) const { return left_[dart]; }
  int next_face(int dart) const { return next_[dart]; }
  int next_ccw(int dart) const { return ccw_[dart]; }
  int prev_ccw(int dart) const { return cw_[dart]; }
  /// Darts leaving vertex v in counterclockwise order, starting with an alpha dart along its curve.
  const std::array<int, 4>& rotation(int v) const { return rot_[v]; }
  const HeegaardDiagram& diagram() const { return *d_; }

 private:
  const HeegaardDiagram* d_;
  std::vector<int> left_, next_, ccw_, cw_;
  std::vector<std::array<int, 4>> rot_;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport check(const HeegaardDiagram& d);
bool validate(const HeegaardDiagram& d);

struct RegionInfo {
  int id = 0;
  int corners = 0;
  bool contains_basepoint = false;
  int genus = 0;
  int boundary_components = 0;
  bool is_disk() const { return genus == 0 && boundary_components == 1; }
};

std::vector<RegionInfo> regions(const HeegaardDiagram& d);
bool is_nice(const HeegaardDiagram& d);

/// Push a finger out of beta dart `base` into its left region and across the
/// alpha darts `path` in turn (each must bound, on its left, the region the
/// finger currently occupies). Existing vertex ids are preserved, two new
/// vertices are appended per crossing.
HeegaardDiagram finger_move(const HeegaardDiagram& d, int base, const std::vector<int>& path);

struct FingerMove {
  int base = 0;
  std::vector<int> path;
  friend bool operator==(const FingerMove&, const FingerMove&) = default;
};

struct NicenResult {
  HeegaardDiagram diagram;
  std::vector<FingerMove> moves;
};

NicenResult nicen(const HeegaardDiagram& d, int budget = 64);

/// Canonical relabelling of regions: ordered by their least boundary dart.
HeegaardDiagram canonicalize_regions(HeegaardDiagram d);

}  // namespace hf
