#pragma once

#include <array>
#include <vector>

#include "equilat/surface.hpp"

namespace equilat::detail {

// Local combinatorics of the k-subdivision of one triangle, in the numbering used
// by subdivide(). Grid point (i, j) sits at i*(c1-c0)/k + j*(c2-c0)/k.
struct SubdivisionLayout {
  struct LocalDart {
    int face;
    int side;
  };

  int k = 0;
  int faces = 0;
  // Corner grid points of each local face, counterclockwise.
  std::vector<std::array<std::array<int, 2>, 3>> corners;
  // Internal partner of each local dart (3*face+side), or -1 on the outer boundary.
  std::vector<int> internal;
  // pieces[s][t]: local dart carrying the t-th piece (from the tail) of outer side s.
  std::array<std::vector<LocalDart>, 3> pieces;
  // For a local dart on the outer boundary: its (side, piece); {-1, -1} otherwise.
  std::vector<std::array<int, 2>> piece_of;
};

const SubdivisionLayout& subdivision_layout(int k);

}  // namespace equilat::detail
