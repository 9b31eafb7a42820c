#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hfcontact/diagram.hpp"
#include "hfcontact/linalg.hpp"

namespace hf {

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intersection point chosen on each alpha curve (vertex ids, indexed by alpha).
struct Generator {
  std::vector<int> points;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Lexicographic in vertex ids.
std::vector<Generator> enumerate_generators(const HeegaardDiagram& d);

/// 0/1 combination of regions; from/to are generator indices when known.
struct RegionDomain {
  std::vector<int> coefficients;  // per region
  int from = -1;
  int to = -1;
  std::vector<int> support() const;
  friend bool operator==(const RegionDomain&, const RegionDomain&) = default;
};

/// Corner data of a domain that is an embedded polygon (without regard to
/// generators): corners where the boundary leaves along beta, and where it
/// leaves along alpha, plus the vertices interior to the domain.
struct PolygonShape {
  std::vector<int> source_corners;
  std::vector<int> target_corners;
  std::vector<int> interior;
};

std::optional<PolygonShape> polygon_shape(const DiagramIndex& idx, const std::vector<int>& coefficients);

/// Empty embedded bigon or rectangle from `from` to `to`.
bool is_empty_polygon(const DiagramIndex& idx, const std::vector<int>& coefficients, const Generator& from,
                      const Generator& to);

/// All empty embedded bigons and rectangles from `from` to `to`, found by
/// tracing candidate outlines along the curves. Requires a nice diagram.
std::vector<RegionDomain> find_polygons(const HeegaardDiagram& d, const Generator& from, const Generator& to);

inline constexpr int kOracleRegionBound = 20;

/// Same set as find_polygons, by testing every 0/1 region vector.
std::vector<RegionDomain> polygon_oracle(const HeegaardDiagram& d, const Generator& from, const Generator& to,
                                         int region_bound = kOracleRegionBound);

enum class PolygonSearch { Outline, Oracle };

struct GF2ChainComplex {
  std::vector<Generator> generators;
  linalg::Mat<GF2> boundary;  // column j = boundary of generator j
  std::map<std::pair<int, int>, std::vector<RegionDomain>> witnesses;  // (from, to)
  int size() const { return static_cast<int>(generators.size()); }
  int index_of(const Generator& g) const;
};

/// Throws ConsistencyError when the square of the differential is nonzero.
GF2ChainComplex differential(const HeegaardDiagram& d, std::vector<Generator> gens,
                             PolygonSearch search = PolygonSearch::Outline, int region_bound = kOracleRegionBound);

struct Homology {
  int rank = 0;
  int kernel = 0;
  int dimension = 0;
  std::vector<std::vector<int>> representatives;  // each a set of generator indices
};

Homology homology(const GF2ChainComplex& c);
/// Homology of the subcomplex spanned by `block` (which must be closed under the differential).
Homology homology(const GF2ChainComplex& c, const std::vector<int>& block);

struct ContactStatus {
  bool nonzero = false;
  std::vector<int> primitive;   // generators summing to a chain with boundary X (when zero)
  std::vector<int> functional;  // generators of a cocycle detecting X (when nonzero)
};

ContactStatus contact_class_status(const GF2ChainComplex& c, int x);

}  // namespace hf
