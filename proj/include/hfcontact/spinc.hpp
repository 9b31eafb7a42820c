#pragma once

#include <cstdint>
#include <vector>

#include "hfcontact/diagram.hpp"
#include "hfcontact/floer.hpp"
#include "hfcontact/linalg.hpp"

namespace hf {

/// Integer 1-chain on the diagram's 1-skeleton, one coefficient per edge.
using Chain1 = std::vector<std::int64_t>;

/// H_1(Y) presented as H_1(Sigma) / <[alpha_i], [beta_i]>.
///
/// Cycles are written in an integer basis K of the cycle lattice ker d_1;
/// `relations` holds the 2-cell boundaries and curve classes in those
/// coordinates, and `smith` its Smith normal form.
struct H1Model {
  linalg::IntMat cycle_basis;      // edges x rank(ker d1)
  linalg::IntMat cycle_coords;     // left inverse on cycles: coords = cycle_coords * chain
  linalg::IntMat relations;        // rank(ker d1) x (#regions + 2n)
  linalg::Smith smith;
  int surface_rank = 0;            // rank H_1(Sigma) = 2 genus
  std::vector<std::int64_t> orders;  // order of each invariant factor kept (0 = free)
  std::vector<int> kept;             // rows of the Smith form that survive (divisor != 1)
};

H1Model h1_model(const HeegaardDiagram& d);

/// Boundary (in 0-chains) of a 1-chain.
std::vector<std::int64_t> chain_boundary(const HeegaardDiagram& d, const Chain1& c);

/// Chain of a whole curve followed along its orientation.
Chain1 curve_chain(const HeegaardDiagram& d, Family f, int curve);
/// Chain of the region boundary, oriented with the region on the left.
Chain1 region_chain(const HeegaardDiagram& d, int region);

/// Alpha paths from x to y and beta paths from y back to x.
Chain1 connecting_loop(const HeegaardDiagram& d, const Generator& x, const Generator& y);

/// Class of a cycle in Smith coordinates: one entry per kept invariant
/// factor, reduced modulo its order (free factors unreduced).
/// Throws PreconditionError if the chain is not a cycle.
std::vector<std::int64_t> difference_class(const HeegaardDiagram& d, const H1Model& m, const Chain1& cycle);

struct SpincPartition {
  std::vector<std::vector<int>> blocks;  // generator indices; block 0 contains X
  std::vector<int> block_of;
  int xi_block = 0;
};

SpincPartition partition_spinc(const HeegaardDiagram& d, const std::vector<Generator>& gens, int x);

}  // namespace hf
