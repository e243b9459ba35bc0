#include <array>

#include "equilat/degree_bound.hpp"
#include "equilat/error.hpp"

namespace equilat {
namespace {

using Triangle = std::array<int, 3>;

// Glues triangles given by counterclockwise vertex labels: dart u->v is glued to
// the dart v->u when one exists. Each directed edge may occur at most once.
GluedSurface glue_labeled(int vertex_count, const std::vector<Triangle>& tris, std::string note) {
  const int faces = static_cast<int>(tris.size());
  const int darts = 3 * faces;
  std::vector<int> row(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const auto& t : tris)
    for (int s = 0; s < 3; ++s) ++row[t[s] + 1];
  for (int v = 0; v < vertex_count; ++v) row[v + 1] += row[v];
  std::vector<DartId> by_tail(static_cast<std::size_t>(darts));
  std::vector<int> fill(row.begin(), row.end() - 1);
  for (DartId d = 0; d < darts; ++d) by_tail[fill[tris[face_of(d)][side_of(d)]]++] = d;

  auto head = [&](DartId d) { return tris[face_of(d)][(side_of(d) + 1) % 3]; };
  std::vector<DartId> gluing(static_cast<std::size_t>(darts), kNoDart);
  for (DartId d = 0; d < darts; ++d) {
    const int u = tris[face_of(d)][side_of(d)];
    const int v = head(d);
    int found = 0;
    for (int i = row[u]; i < row[u + 1]; ++i) {
      if (head(by_tail[i]) == v) ++found;
    }
    if (found != 1) throw InvariantViolation("disk assembly: directed edge used twice");
    for (int i = row[v]; i < row[v + 1]; ++i) {
      if (head(by_tail[i]) == u) {
        if (gluing[d] != kNoDart) throw InvariantViolation("disk assembly: edge shared by three faces");
        gluing[d] = by_tail[i];
      }
    }
  }
  return GluedSurface(faces, std::move(gluing), {std::move(note)});
}

// Annulus between an outer cycle of n vertices (labels outer + j) and an inner
// cycle of n/2 vertices (labels inner + t). Outer-edge triangles come first, in
// order of j, then inner-edge triangles in order of t.
void append_annulus(int n, int outer, int inner, std::vector<Triangle>& tris) {
  const int m = n / 2;
  auto x = [&](int j) { return outer + (j % n); };
  auto y = [&](int t) { return inner + (t % m); };
  const bool odd = n % 2 == 1;
  for (int j = 0; j < n; ++j) {
    int apex;
    if (j == n - 1 || (odd && j == n - 2)) {
      apex = 0;
    } else if (j % 2 == 0) {
      apex = j / 2;
    } else {
      apex = (j + 1) / 2;
    }
    tris.push_back({x(j), x(j + 1), y(apex)});
  }
  for (int t = 0; t < m; ++t) {
    int apex = 2 * t + 1;
    if (t == m - 1) apex = odd ? n - 2 : n - 1;
    tris.push_back({y(t + 1), y(t), x(apex)});
  }
}

}  // namespace

TriangulatedDisk build_TD(int d) {
  if (d < 2) throw PreconditionError("TD_d requires d >= 2, got " + std::to_string(d));
  std::vector<DartId> gluing(static_cast<std::size_t>(3 * d), kNoDart);
  for (int i = 0; i < d; ++i) {
    const DartId a = make_dart(i, 2);
    const DartId b = make_dart((i + 1) % d, 0);
    gluing[a] = b;
    gluing[b] = a;
  }
  TriangulatedDisk disk;
  disk.kind = DiskKind::TD;
  disk.d = d;
  disk.surface = GluedSurface(d, std::move(gluing), {"TD_" + std::to_string(d)});
  disk.ring_sizes = {d};
  disk.rings.emplace_back();
  for (int i = 0; i < d; ++i) disk.rings[0].push_back(make_dart(i, 1));
  disk.layer_begin = {0, d};
  disk.center_dart = make_dart(0, 0);
  return disk;
}

TriangulatedDisk build_TH(int d) {
  if (d < 8) throw PreconditionError("TH_d requires d >= 8, got " + std::to_string(d));
  TriangulatedDisk disk;
  disk.kind = DiskKind::TH;
  disk.d = d;
  disk.ring_sizes = {d};
  while (disk.ring_sizes.back() > 7) disk.ring_sizes.push_back(disk.ring_sizes.back() / 2);

  std::vector<int> offset;
  int labels = 0;
  for (int n : disk.ring_sizes) {
    offset.push_back(labels);
    labels += n;
  }
  const int center = labels++;

  std::vector<Triangle> tris;
  const int layers = disk.layer_count();
  for (int i = 0; i < layers; ++i) {
    disk.layer_begin.push_back(static_cast<FaceId>(tris.size()));
    const int n = disk.ring_sizes[i];
    if (i + 1 < layers) {
      append_annulus(n, offset[i], offset[i + 1], tris);
    } else {
      for (int j = 0; j < n; ++j) tris.push_back({center, offset[i] + j, offset[i] + (j + 1) % n});
    }
  }
  disk.layer_begin.push_back(static_cast<FaceId>(tris.size()));
  disk.surface = glue_labeled(labels, tris, "TH_" + std::to_string(d));

  for (int i = 0; i < layers; ++i) {
    const int side = i + 1 < layers ? 0 : 1;
    std::vector<DartId> ring;
    for (int j = 0; j < disk.ring_sizes[i]; ++j) ring.push_back(make_dart(disk.layer_begin[i] + j, side));
    disk.rings.push_back(std::move(ring));
  }
  disk.center_dart = make_dart(disk.layer_begin[layers - 1], 0);
  return disk;
}

THReport th_report(const TriangulatedDisk& disk) {
  const GluedSurface& s = disk.surface;
  const VertexOrbits orbits(s);
  THReport r;
  r.d = disk.d;
  r.boundary_edges = s.boundary_dart_count();
  r.faces = s.face_count();
  r.vertices = orbits.count();
  const int edges = (3 * s.face_count() + s.boundary_dart_count()) / 2;
  r.chi = r.vertices - edges + r.faces;
  for (const auto& v : orbits.vertices()) {
    int& slot = v.boundary ? r.max_boundary_degree : r.max_interior_degree;
    slot = std::max(slot, v.degree);
  }
  for (int i = 2; i <= disk.layer_count(); ++i) {
    int best = 0;
    for (DartId dart : disk.rings[i - 1]) best = std::max(best, orbits.degree(orbits.tail(dart)));
    r.layer_outer_max_degree.push_back(best);
    r.layer_has_degree7.push_back(best == 7);
  }
  return r;
}

}  // namespace equilat
