#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equilat/surface.hpp"

namespace equilat {

enum class DiskKind { TD, TH };

// A triangulated disk with its ring structure.
//
// Ring i holds the vertices x_{i,0..d_i-1}; rings[i][j] is the dart running
// x_{i,j} -> x_{i,j+1} inside the layer bounded by ring i, so rings[0] lists the
// boundary darts in counterclockwise order. TD_d has a single ring. Layer i + 1
// (TA_{i+1}, or the closing fan) owns faces [layer_begin[i], layer_begin[i+1]).
struct TriangulatedDisk {
  DiskKind kind = DiskKind::TD;
  int d = 0;
  GluedSurface surface;
  std::vector<int> ring_sizes;
  std::vector<std::vector<DartId>> rings;
  std::vector<FaceId> layer_begin;
  // Outgoing dart at the center vertex.
  DartId center_dart = 0;

  const std::vector<DartId>& boundary() const { return rings.front(); }
  int layer_count() const { return static_cast<int>(ring_sizes.size()); }
};

// Fan of d triangles around one interior vertex. Face i has corners
// (center, b_i, b_{i+1}). Throws PreconditionError for d < 2.
TriangulatedDisk build_TD(int d);

// Layered disk with d boundary edges, interior degrees <= 7. Throws
// PreconditionError for d < 8.
TriangulatedDisk build_TH(int d);

// Measured degree data of a TH disk, one field per claim checked.
struct THReport {
  int d = 0;
  int boundary_edges = 0;
  int faces = 0;
  int vertices = 0;
  int chi = 0;
  int max_interior_degree = 0;
  int max_boundary_degree = 0;
  // For each layer i >= 2 (index i - 2): whether some vertex of its outer ring
  // has degree 7 in the whole disk.
  std::vector<bool> layer_has_degree7;
  std::vector<int> layer_outer_max_degree;
};

THReport th_report(const TriangulatedDisk& disk);

// ---------------------------------------------------------------------------
// The bounded-degree map S -> B(S)

// One closed star of S1 replaced by a TH disk.
struct StarSwap {
  VertexId center = 0;  // vertex id in S1
  int degree = 0;
  // Outgoing darts at the center in S1, counterclockwise, starting at the
  // smallest dart id.
  std::vector<DartId> spokes;
  // First face of the TH block in S2.
  FaceId block_begin = 0;
  int block_faces = 0;
};

// Everything needed to undo the map exactly.
struct DegreeMapProvenance {
  int original_faces = 0;
  // S2 face i < kept.size() is S1 face kept[i].
  std::vector<FaceId> kept;
  std::vector<StarSwap> swaps;
};

struct BoundedDegreeResult {
  GluedSurface s1;
  GluedSurface s2;
  GluedSurface b;
  DegreeMapProvenance provenance;
  int genus = 0;
  int max_degree = 0;
  int v_ne6_before = 0;
  int v_ne6_after = 0;
  // faces(B) / T
  double sigma = 0;
  // |V_{!=6}(B)| / (|V_{!=6}(S)| + g); 0 when the denominator vanishes.
  double mu = 0;
};

// S1 = 4-subdivision, S2 = S1 with every degree > 7 closed star swapped for TH_d
// (ascending center order), B = 3-subdivision of S2. Requires a closed connected
// surface. Throws InvariantViolation if any postcondition fails.
BoundedDegreeResult bounded_degree_map(const GluedSurface& s);

// Recovers S from B(S) using only the recorded provenance. Throws InvalidSurface
// when B does not match the provenance.
GluedSurface recover_original(const GluedSurface& b, const DegreeMapProvenance& provenance);

// Recovers S1 from S2 by swapping each recorded TH block back to a fan.
GluedSurface undo_star_swaps(const GluedSurface& s2, const DegreeMapProvenance& provenance);

// Plausible TH centers: for every vertex of degree 4..7, the values d >= 8 for
// which an embedded TH_d centered there is consistent with having been produced
// by the star swap (boundary degrees d_S = d_TH + 3, flat ring just outside).
std::map<VertexId, std::set<int>> th_center_candidates(const GluedSurface& s);

// ---------------------------------------------------------------------------
// Tri_lb membership

struct LbCertificate {
  int max_degree = 0;
  bool degree_ok = false;
  bool divisible = false;
  // Coarse triangulation with subdivide(*coarse, 3) isomorphic to S.
  std::optional<GluedSurface> coarse;
  // macro_vertex[v]: v is a corner of the coarse triangulation.
  std::vector<bool> macro_vertex;
  std::string detail;

  bool positive() const { return degree_ok && coarse.has_value(); }
};

LbCertificate check_tri_lb(const GluedSurface& s);

struct SeparationReport {
  int ne6_count = 0;
  // Smallest edge-path distance between two distinct V_{!=6} vertices (-1 when
  // fewer than two exist).
  int min_distance = -1;
  bool distance_ok = false;
  bool macro_vertices_ok = false;
  std::string detail;

  bool passed() const { return distance_ok && macro_vertices_ok; }
};

// Requires a positive certificate; throws PreconditionError otherwise.
SeparationReport separation_check(const GluedSurface& s, const LbCertificate& cert);

}  // namespace equilat
