#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equilat/error.hpp"
#include "equilat/translation.hpp"

namespace equilat {

// Decomposition refused: genus 1 surfaces are not decomposed.
class GenusOneInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Decomposition refused: no vertex of degree > 6 to seed trajectories from.
class NoConePoints : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Edge trajectories of directions 1 (A0), w (A1) and -w (A2). Flags are kept per
// dart and always agree on glued pairs.
struct TrajectoryComplex {
  std::vector<std::uint8_t> a0;
  std::vector<std::uint8_t> a1;
  std::vector<std::uint8_t> a2;

  bool in_a(DartId d) const {
    const auto i = static_cast<std::size_t>(d);
    return a0[i] || a1[i] || a2[i];
  }
  friend bool operator==(const TrajectoryComplex&, const TrajectoryComplex&) = default;
};

// Worklist fixpoint of the three trajectory rules. A shuffle seed permutes the
// processing order; the result does not depend on it.
TrajectoryComplex build_trajectories(const GluedSurface& s, const TranslationStructure& st,
                                     std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct PolytopeEdge {
  VertexId from = 0;
  VertexId to = 0;
  Root6 direction;
  std::vector<DartId> darts;
};

// A complementary region of A. boundary[i] runs along A with the region on its
// left; the region has fan[i] triangle corners at the head of boundary[i].
struct FaceRegion {
  std::vector<FaceId> triangles;
  std::vector<DartId> boundary;
  std::vector<int> fan;
  // False when the boundary splits into more than one cycle.
  bool single_boundary = true;
};

struct PolytopeB {
  std::vector<VertexId> vertices;
  std::vector<PolytopeEdge> edges;
  std::vector<FaceRegion> faces;
  std::vector<int> region_of_triangle;
  // Structural properties of B, each checked independently.
  bool edges_have_axis_directions = false;  // A-edges carry weights +-1, +-w
  bool cone_edges_in_a = false;             // V_{>6}: every +-1, +-w edge is in A
  bool b_vertex_horizontals_in_a = false;   // V(B): every +-1 edge is in A
  bool b_vertex_periods_ok = false;         // V(B) periods lie in 3Z + 3wZ
  bool a_covered_by_edges = false;          // every A-edge lies in an edge of B
  std::string detail;

  bool properties_ok() const {
    return edges_have_axis_directions && cone_edges_in_a && b_vertex_horizontals_in_a && b_vertex_periods_ok &&
           a_covered_by_edges;
  }
};

PolytopeB build_polytope(const GluedSurface& s, const TranslationStructure& st, const TrajectoryComplex& a);

struct FaceGeometry {
  int id = 0;
  int triangles = 0;
  Eisenstein closure;  // sum of boundary periods
  std::vector<VertexId> corners;
  std::vector<int> corner_degrees;
  // Interior angle at each corner in units of pi/3.
  std::vector<int> corner_angles;
  std::int64_t length = 0;  // side along +-1
  std::int64_t width = 0;   // side along +-w
  TriangleArea area;

  bool closes = false;
  bool four_corners = false;
  bool alternating = false;
  bool allowed_pairs = false;
  bool opposite_sides_equal = false;
  bool flat_interior = false;
  bool has_cone_corner = false;
  std::string detail;

  bool is_parallelogram() const {
    return closes && four_corners && alternating && allowed_pairs && opposite_sides_equal && flat_interior;
  }
};

FaceGeometry develop_face(const GluedSurface& s, const TranslationStructure& st, const PolytopeB& b, int face);

struct Decomposition {
  TrajectoryComplex a;
  PolytopeB b;
  std::vector<FaceGeometry> faces;
  int genus = 0;
  bool face_count_ok = false;  // |F(B)| <= 12(g-1)
  bool tiles = false;          // triangle counts sum to T
  bool area_ok = false;        // sum of 2*l*w equals T
  bool sides_ok = false;       // l, w >= 3
  bool cone_corners_ok = false;
  TriangleArea total_area;
  std::string detail;

  bool passed() const;
};

// Full pipeline. Throws GenusOneInput for genus 1, NoConePoints when V_{>6} is
// empty, PreconditionError for non-closed or disconnected input.
Decomposition decompose(const GluedSurface& s, const TranslationStructure& st,
                        std::optional<std::uint64_t> shuffle_seed = std::nullopt);

}  // namespace equilat
