#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equilat {

using DartId = std::int32_t;
using FaceId = std::int32_t;
using VertexId = std::int32_t;

// Marker for an unmatched (boundary) dart.
inline constexpr DartId kNoDart = -1;

// Dart 3f+s is side s of face f, running counterclockwise from corner s to corner s+1.
constexpr FaceId face_of(DartId d) { return d / 3; }
constexpr int side_of(DartId d) { return d % 3; }
constexpr DartId make_dart(FaceId f, int side) { return 3 * f + side; }
constexpr DartId next_in_face(DartId d) { return 3 * (d / 3) + (d % 3 + 1) % 3; }
constexpr DartId prev_in_face(DartId d) { return 3 * (d / 3) + (d % 3 + 2) % 3; }

// A surface glued from T unit equilateral triangles.
//
// The gluing is a partial involution on darts. Gluing a <-> b identifies dart a
// traversed forward with dart b traversed backward, so every gluing preserves
// orientation. Unmatched darts are boundary edges. Loops and multi-edges are
// allowed; a dart is never glued to itself.
class GluedSurface {
 public:
  GluedSurface() = default;

  // Throws InvalidSurface when `gluing` is not a fixed-point-free partial involution
  // on {0, ..., 3T-1}.
  GluedSurface(int face_count, std::vector<DartId> gluing,
               std::vector<std::string> provenance = {});

  // Builds from a list of glued pairs; darts not mentioned are boundary.
  static GluedSurface from_pairs(int face_count,
                                 std::span<const std::pair<DartId, DartId>> pairs,
                                 std::vector<std::string> provenance = {});

  int face_count() const { return face_count_; }
  int dart_count() const { return 3 * face_count_; }

  DartId partner(DartId d) const { return gluing_[static_cast<std::size_t>(d)]; }
  bool is_boundary(DartId d) const { return partner(d) == kNoDart; }
  bool is_closed() const { return boundary_darts_ == 0; }
  int boundary_dart_count() const { return boundary_darts_; }
  std::span<const DartId> gluing() const { return gluing_; }

  // Next outgoing dart counterclockwise around the tail vertex of d, or kNoDart
  // when the step would cross the boundary.
  DartId rotate_ccw(DartId d) const { return partner(prev_in_face(d)); }
  // Inverse of rotate_ccw.
  DartId rotate_cw(DartId d) const {
    const DartId p = partner(d);
    return p == kNoDart ? kNoDart : next_in_face(p);
  }

  // Construction metadata ("3-subdivision", "double", ...). Not part of equality.
  const std::vector<std::string>& provenance() const { return provenance_; }
  GluedSurface with_note(std::string note) const;

  // Labeled equality: same face count and identical gluing arrays.
  friend bool operator==(const GluedSurface& a, const GluedSurface& b) {
    return a.face_count_ == b.face_count_ && a.gluing_ == b.gluing_;
  }

 private:
  int face_count_ = 0;
  int boundary_darts_ = 0;
  std::vector<DartId> gluing_;
  std::vector<std::string> provenance_;
};

// ---------------------------------------------------------------------------
// TSF text format

// Parses `tsf v1` text. Throws ParseError for syntax problems and InvalidSurface
// for involution violations.
GluedSurface load_surface(std::string_view text);
// Canonical serialization of the labeled surface (pairs sorted by first dart).
std::string to_tsf(const GluedSurface& s);

GluedSurface read_surface_file(const std::string& path);
void write_surface_file(const std::string& path, const GluedSurface& s);

// ---------------------------------------------------------------------------
// Vertices and elementary topology

struct VertexReport {
  VertexId id = 0;
  // Edges emanating from the vertex: corner count for interior vertices,
  // corner count + 1 for boundary vertices.
  int degree = 0;
  bool boundary = false;
  // Outgoing darts in counterclockwise order. For boundary vertices the first
  // entry is the outgoing boundary dart.
  std::vector<DartId> corners;
};

class VertexOrbits {
 public:
  explicit VertexOrbits(const GluedSurface& s);

  const std::vector<VertexReport>& vertices() const { return vertices_; }
  int count() const { return static_cast<int>(vertices_.size()); }
  const VertexReport& operator[](VertexId v) const { return vertices_[static_cast<std::size_t>(v)]; }

  VertexId tail(DartId d) const { return tail_[static_cast<std::size_t>(d)]; }
  VertexId head(DartId d) const { return tail_[static_cast<std::size_t>(next_in_face(d))]; }
  int degree(VertexId v) const { return vertices_[static_cast<std::size_t>(v)].degree; }

  int max_degree() const;
  std::vector<VertexId> above_six() const;   // V_{>6}
  std::vector<VertexId> not_six() const;     // V_{!=6}
  std::vector<VertexId> below_six() const;   // V_{<6}

 private:
  std::vector<VertexReport> vertices_;
  std::vector<VertexId> tail_;
};

inline VertexOrbits vertex_orbits(const GluedSurface& s) { return VertexOrbits(s); }

struct EulerReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int chi = 0;
  int boundary_components = 0;
  int genus = 0;
  // Violated sanity conditions (T even, T >= 4g-4, g/T <= 1/2). Always empty for
  // valid closed connected surfaces.
  std::vector<std::string> warnings;
};

// Requires a connected surface; throws PreconditionError otherwise.
EulerReport euler_and_genus(const GluedSurface& s);

int count_boundary_components(const GluedSurface& s);
bool is_connected(const GluedSurface& s);

struct ComponentSplit {
  std::vector<GluedSurface> components;
  std::vector<int> component_of_face;
  std::vector<FaceId> local_face;
};

// Components ordered by their smallest face; faces keep their relative order.
ComponentSplit split_components(const GluedSurface& s);
std::vector<GluedSurface> connected_components(const GluedSurface& s);

// Disjoint union, faces of `b` numbered after those of `a`.
GluedSurface disjoint_union(const GluedSurface& a, const GluedSurface& b);

// ---------------------------------------------------------------------------
// Constructions

// Each face is cut into k^2 faces. Sub-face numbering: face f owns the block
// [f*k^2, (f+1)*k^2); inside the block, up-triangles come first in (j, i) order,
// then down-triangles. Throws PreconditionError when k < 2.
GluedSurface subdivide(const GluedSurface& s, int k);

// Inverse of subdivide for surfaces that still carry the exact numbering produced
// by subdivide. Throws InvalidSurface when `s` is not such a subdivision.
GluedSurface unsubdivide(const GluedSurface& s, int k);

struct ConformalDouble {
  GluedSurface surface;
  // Orientation-reversing involution on darts: mirror[d] is the dart running
  // along the same edge in the opposite copy, traversed the other way.
  std::vector<DartId> mirror;
};

// Glues S to its mirror copy along the boundary. Throws PreconditionError for
// closed input.
ConformalDouble conformal_double(const GluedSurface& s);

// The two-triangle sphere with three degree-2 vertices.
GluedSurface pillowcase();
// The two-triangle torus with a single degree-6 vertex.
GluedSurface hexagonal_torus();

// Uniform fixed-point-free involution on 3T darts, resampled until connected.
// Deterministic in `seed`. Throws PreconditionError for odd or non-positive T and
// Error when `max_attempts` samples are all disconnected.
GluedSurface random_surface(int face_count, std::uint64_t seed, int max_attempts = 100000);

// ---------------------------------------------------------------------------
// Isomorphism

// Applies an orientation-preserving relabeling: face f becomes face_map[f] and its
// side s becomes side (s + rotation[f]) mod 3.
GluedSurface relabel(const GluedSurface& s, std::span<const FaceId> face_map,
                     std::span<const int> rotation);

// Relabeling-invariant encoding of a connected surface (TSF text of the minimal
// breadth-first relabeling). Equal forms iff orientation-preserving simplicially
// isomorphic.
std::string canonical_form(const GluedSurface& s);
GluedSurface canonical_surface(const GluedSurface& s);

bool are_isomorphic(const GluedSurface& a, const GluedSurface& b);

}  // namespace equilat
