#include <algorithm>
#include <limits>
#include <queue>

#include "embedding.hpp"
#include "equilat/degree_bound.hpp"
#include "equilat/error.hpp"
#include "subdivision_layout.hpp"

namespace equilat {
namespace {

// The 3-subdivision of one triangle as a standalone disk.
GluedSurface macro_model() {
  const auto& layout = detail::subdivision_layout(3);
  std::vector<DartId> gluing(layout.internal.begin(), layout.internal.end());
  return GluedSurface(layout.faces, std::move(gluing));
}

struct Coarsening {
  GluedSurface coarse;
  std::vector<bool> macro_vertex;
};

// Tries to read S as the 3-subdivision of a coarse surface, with `seed` the first
// piece of side 0 of macro face 0. The propagation is forced, so one seed either
// works or rules out every structure in which its tail is a macro vertex.
std::optional<Coarsening> coarsen_from(const GluedSurface& s, const VertexOrbits& orbits, DartId seed) {
  const auto& layout = detail::subdivision_layout(3);
  static const GluedSurface model = macro_model();
  const int block = layout.faces;
  auto local = [&](int side, int piece) {
    const auto ld = layout.pieces[side][piece];
    return make_dart(ld.face, ld.side);
  };
  const DartId model_start = local(0, 0);

  detail::FaceStamp stamp(s.face_count());
  std::vector<int> owner(static_cast<std::size_t>(s.face_count()), -1);
  // For each fine dart that is piece 0 of a macro side: (macro face, side).
  std::vector<std::pair<int, int>> first_piece(static_cast<std::size_t>(s.dart_count()), {-1, -1});
  std::vector<std::vector<detail::FaceImage>> macros;

  auto place = [&](DartId at) -> int {
    auto img = detail::embed_model(model, model_start, s, at, stamp);
    if (!img) return -1;
    const int id = static_cast<int>(macros.size());
    for (const auto& fi : *img) {
      if (owner[fi.face] >= 0) return -1;
    }
    for (const auto& fi : *img) owner[fi.face] = id;
    for (int side = 0; side < 3; ++side) first_piece[detail::image_of(*img, local(side, 0))] = {id, side};
    macros.push_back(std::move(*img));
    return id;
  };

  if (place(seed) < 0) return std::nullopt;
  std::vector<DartId> coarse_gluing;
  for (std::size_t m = 0; m < macros.size(); ++m) {
    for (int side = 0; side < 3; ++side) {
      const DartId last = detail::image_of(macros[m], local(side, 2));
      const DartId p = s.partner(last);
      if (p == kNoDart) return std::nullopt;
      if (first_piece[p].first < 0) {
        if (owner[face_of(p)] >= 0) return std::nullopt;
        if (place(p) < 0) return std::nullopt;
      }
    }
  }
  if (static_cast<int>(macros.size()) * block != s.face_count()) return std::nullopt;

  const int coarse_faces = static_cast<int>(macros.size());
  coarse_gluing.assign(static_cast<std::size_t>(3 * coarse_faces), kNoDart);
  for (int m = 0; m < coarse_faces; ++m) {
    for (int side = 0; side < 3; ++side) {
      const auto [other, other_side] = first_piece[s.partner(detail::image_of(macros[m], local(side, 2)))];
      for (int t = 0; t < 3; ++t) {
        const DartId mine = detail::image_of(macros[m], local(side, t));
        const DartId theirs = detail::image_of(macros[other], local(other_side, 2 - t));
        if (s.partner(mine) != theirs) return std::nullopt;
      }
      coarse_gluing[make_dart(m, side)] = make_dart(other, other_side);
    }
  }
  Coarsening c;
  try {
    c.coarse = GluedSurface(coarse_faces, std::move(coarse_gluing), {"3-coarsening"});
  } catch (const InvalidSurface&) {
    return std::nullopt;
  }
  // Cross-check: relabeling S along the macro structure gives subdivide(coarse, 3).
  std::vector<FaceId> face_map(static_cast<std::size_t>(s.face_count()));
  std::vector<int> rotation(static_cast<std::size_t>(s.face_count()));
  for (int m = 0; m < coarse_faces; ++m) {
    for (int lf = 0; lf < block; ++lf) {
      const auto& fi = macros[m][lf];
      face_map[fi.face] = m * block + lf;
      rotation[fi.face] = (3 - fi.rotation) % 3;
    }
  }
  if (!(relabel(s, face_map, rotation) == subdivide(c.coarse, 3))) {
    throw InvariantViolation("3-coarsening does not reproduce the surface");
  }
  c.macro_vertex.assign(static_cast<std::size_t>(orbits.count()), false);
  for (const auto& img : macros) {
    for (int side = 0; side < 3; ++side) c.macro_vertex[orbits.tail(detail::image_of(img, local(side, 0)))] = true;
  }
  return c;
}

}  // namespace

LbCertificate check_tri_lb(const GluedSurface& s) {
  if (!s.is_closed()) throw PreconditionError("check_tri_lb requires a closed surface");
  LbCertificate cert;
  const VertexOrbits orbits(s);
  cert.max_degree = orbits.max_degree();
  cert.degree_ok = cert.max_degree <= 7;
  cert.divisible = s.face_count() % 9 == 0;
  if (!cert.degree_ok) {
    cert.detail = "max degree " + std::to_string(cert.max_degree) + " exceeds 7";
    return cert;
  }
  if (!cert.divisible) {
    cert.detail = "face count " + std::to_string(s.face_count()) + " is not divisible by 9";
    return cert;
  }
  if (!is_connected(s)) {
    cert.detail = "surface is disconnected";
    return cert;
  }
  std::vector<DartId> seeds;
  const auto irregular = orbits.not_six();
  if (!irregular.empty()) {
    // Every vertex of degree != 6 must be a macro vertex; any corner there is the
    // corner of a macro face.
    seeds.push_back(orbits[irregular.front()].corners.front());
  } else {
    for (DartId d = 0; d < s.dart_count(); ++d) seeds.push_back(d);
  }
  for (DartId seed : seeds) {
    if (auto c = coarsen_from(s, orbits, seed)) {
      cert.coarse = std::move(c->coarse);
      cert.macro_vertex = std::move(c->macro_vertex);
      cert.detail = "3-subdivision of a " + std::to_string(cert.coarse->face_count()) + "-face surface";
      return cert;
    }
  }
  cert.detail = "no 3-coarsening exists";
  return cert;
}

SeparationReport separation_check(const GluedSurface& s, const LbCertificate& cert) {
  if (!cert.positive()) throw PreconditionError("separation_check requires a positive Tri_lb certificate");
  const VertexOrbits orbits(s);
  SeparationReport r;
  const auto irregular = orbits.not_six();
  r.ne6_count = static_cast<int>(irregular.size());

  r.macro_vertices_ok = true;
  for (VertexId v : irregular) {
    if (!cert.macro_vertex.at(static_cast<std::size_t>(v))) {
      r.macro_vertices_ok = false;
      r.detail = "vertex " + std::to_string(v) + " of degree " + std::to_string(orbits.degree(v)) +
                 " is not a macro vertex";
      break;
    }
  }

  // Multi-source BFS; the closest pair of distinct sources meets across some edge.
  const int n = orbits.count();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> source(static_cast<std::size_t>(n), -1);
  std::queue<VertexId> queue;
  for (VertexId v : irregular) {
    dist[v] = 0;
    source[v] = v;
    queue.push(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (DartId d : orbits[v].corners) {
      const VertexId w = orbits.head(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        source[w] = source[v];
        queue.push(w);
      }
    }
  }
  int best = std::numeric_limits<int>::max();
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const VertexId a = orbits.tail(d);
    const VertexId b = orbits.head(d);
    if (source[a] >= 0 && source[b] >= 0 && source[a] != source[b]) best = std::min(best, dist[a] + dist[b] + 1);
  }
  r.min_distance = best == std::numeric_limits<int>::max() ? -1 : best;
  r.distance_ok = r.min_distance < 0 || r.min_distance >= 3;
  if (!r.distance_ok && r.detail.empty()) {
    r.detail = "two vertices of degree != 6 at distance " + std::to_string(r.min_distance);
  }
  return r;
}

}  // namespace equilat
