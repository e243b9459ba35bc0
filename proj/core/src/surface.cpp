#include "equilat/surface.hpp"

#include <algorithm>
#include <queue>

#include "equilat/error.hpp"

namespace equilat {

GluedSurface::GluedSurface(int face_count, std::vector<DartId> gluing,
                           std::vector<std::string> provenance)
    : face_count_(face_count), gluing_(std::move(gluing)), provenance_(std::move(provenance)) {
  if (face_count_ < 0) throw InvalidSurface("negative face count");
  const auto darts = static_cast<std::size_t>(3 * face_count_);
  if (gluing_.size() != darts) {
    throw InvalidSurface("gluing has " + std::to_string(gluing_.size()) + " entries, expected " +
                         std::to_string(darts));
  }
  for (std::size_t d = 0; d < darts; ++d) {
    const DartId p = gluing_[d];
    if (p == kNoDart) {
      ++boundary_darts_;
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= darts) {
      throw InvalidSurface("dart " + std::to_string(d) + " glued to out-of-range dart " +
                           std::to_string(p));
    }
    if (static_cast<std::size_t>(p) == d) {
      throw InvalidSurface("dart " + std::to_string(d) + " is glued to itself");
    }
    if (gluing_[static_cast<std::size_t>(p)] != static_cast<DartId>(d)) {
      throw InvalidSurface("gluing is not an involution at dart " + std::to_string(d));
    }
  }
}

GluedSurface GluedSurface::from_pairs(int face_count,
                                      std::span<const std::pair<DartId, DartId>> pairs,
                                      std::vector<std::string> provenance) {
  if (face_count < 0) throw InvalidSurface("negative face count");
  const DartId darts = 3 * face_count;
  std::vector<DartId> gluing(static_cast<std::size_t>(darts), kNoDart);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= darts || b < 0 || b >= darts) {
      throw InvalidSurface("dart out of range in pair (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
    }
    if (a == b) throw InvalidSurface("dart " + std::to_string(a) + " is glued to itself");
    if (gluing[a] != kNoDart || gluing[b] != kNoDart) {
      throw InvalidSurface("dart glued twice in pair (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
    }
    gluing[a] = b;
    gluing[b] = a;
  }
  return GluedSurface(face_count, std::move(gluing), std::move(provenance));
}

GluedSurface GluedSurface::with_note(std::string note) const {
  GluedSurface out = *this;
  out.provenance_.push_back(std::move(note));
  return out;
}

VertexOrbits::VertexOrbits(const GluedSurface& s) {
  const DartId darts = s.dart_count();
  tail_.assign(static_cast<std::size_t>(darts), -1);
  for (DartId d = 0; d < darts; ++d) {
    if (tail_[d] != -1) continue;
    // Walk clockwise to the outgoing boundary dart, if there is one.
    DartId start = d;
    bool boundary = false;
    for (DartId x = d;;) {
      const DartId y = s.rotate_cw(x);
      if (y == kNoDart) {
        boundary = true;
        start = x;
        break;
      }
      if (y == d) break;
      x = y;
    }
    VertexReport report;
    report.id = static_cast<VertexId>(vertices_.size());
    report.boundary = boundary;
    for (DartId c = start;;) {
      report.corners.push_back(c);
      tail_[c] = report.id;
      c = s.rotate_ccw(c);
      if (c == kNoDart || c == start) break;
    }
    report.degree = static_cast<int>(report.corners.size()) + (boundary ? 1 : 0);
    vertices_.push_back(std::move(report));
  }
}

int VertexOrbits::max_degree() const {
  int best = 0;
  for (const auto& v : vertices_) best = std::max(best, v.degree);
  return best;
}

std::vector<VertexId> VertexOrbits::above_six() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (v.degree > 6) out.push_back(v.id);
  return out;
}

std::vector<VertexId> VertexOrbits::not_six() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (v.degree != 6) out.push_back(v.id);
  return out;
}

std::vector<VertexId> VertexOrbits::below_six() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (v.degree < 6) out.push_back(v.id);
  return out;
}

GluedSurface pillowcase() {
  const std::pair<DartId, DartId> pairs[] = {{0, 5}, {1, 4}, {2, 3}};
  return GluedSurface::from_pairs(2, pairs, {"pillowcase"});
}

GluedSurface hexagonal_torus() {
  const std::pair<DartId, DartId> pairs[] = {{0, 3}, {1, 4}, {2, 5}};
  return GluedSurface::from_pairs(2, pairs, {"hexagonal torus"});
}

GluedSurface disjoint_union(const GluedSurface& a, const GluedSurface& b) {
  const DartId shift = a.dart_count();
  std::vector<DartId> gluing(a.gluing().begin(), a.gluing().end());
  for (DartId p : b.gluing()) gluing.push_back(p == kNoDart ? kNoDart : p + shift);
  return GluedSurface(a.face_count() + b.face_count(), std::move(gluing), {"disjoint union"});
}

}  // namespace equilat
