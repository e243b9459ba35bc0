#include <map>
#include <memory>
#include <mutex>

#include "equilat/error.hpp"
#include "equilat/surface.hpp"
#include "subdivision_layout.hpp"

namespace equilat {
namespace detail {
namespace {

SubdivisionLayout build_layout(int k) {
  SubdivisionLayout l;
  l.k = k;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i + j <= k - 1; ++i)
      l.corners.push_back({{{i, j}, {i + 1, j}, {i, j + 1}}});
  for (int j = 0; j + 1 < k; ++j)
    for (int i = 0; i + j <= k - 2; ++i)
      l.corners.push_back({{{i + 1, j}, {i + 1, j + 1}, {i, j + 1}}});
  l.faces = static_cast<int>(l.corners.size());

  std::map<std::array<int, 4>, int> by_edge;
  for (int f = 0; f < l.faces; ++f) {
    for (int s = 0; s < 3; ++s) {
      const auto& p = l.corners[f][s];
      const auto& q = l.corners[f][(s + 1) % 3];
      by_edge[{p[0], p[1], q[0], q[1]}] = 3 * f + s;
    }
  }
  l.internal.assign(static_cast<std::size_t>(3 * l.faces), -1);
  for (const auto& [e, d] : by_edge) {
    const auto it = by_edge.find({e[2], e[3], e[0], e[1]});
    if (it != by_edge.end()) l.internal[d] = it->second;
  }
  l.piece_of.assign(static_cast<std::size_t>(3 * l.faces), {-1, -1});
  for (int s = 0; s < 3; ++s) l.pieces[s].resize(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    const std::array<std::array<int, 4>, 3> outer = {{
        {t, 0, t + 1, 0},
        {k - t, t, k - t - 1, t + 1},
        {0, k - t, 0, k - t - 1},
    }};
    for (int s = 0; s < 3; ++s) {
      const int d = by_edge.at(outer[s]);
      l.pieces[s][t] = {d / 3, d % 3};
      l.piece_of[d] = {s, t};
    }
  }
  return l;
}

}  // namespace

const SubdivisionLayout& subdivision_layout(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SubdivisionLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<SubdivisionLayout>(build_layout(k));
  return *slot;
}

}  // namespace detail

GluedSurface subdivide(const GluedSurface& s, int k) {
  if (k < 2) throw PreconditionError("subdivide requires k >= 2, got " + std::to_string(k));
  const auto& layout = detail::subdivision_layout(k);
  const int block = layout.faces;
  const int faces = s.face_count() * block;
  std::vector<DartId> gluing(static_cast<std::size_t>(3 * faces), kNoDart);
  auto global = [block](FaceId f, int local_dart) { return 3 * block * f + local_dart; };
  for (FaceId f = 0; f < s.face_count(); ++f) {
    for (int ld = 0; ld < 3 * block; ++ld) {
      if (layout.internal[ld] >= 0) gluing[global(f, ld)] = global(f, layout.internal[ld]);
    }
    for (int side = 0; side < 3; ++side) {
      const DartId p = s.partner(make_dart(f, side));
      if (p == kNoDart) continue;
      for (int t = 0; t < k; ++t) {
        const auto mine = layout.pieces[side][t];
        const auto theirs = layout.pieces[side_of(p)][k - 1 - t];
        gluing[global(f, 3 * mine.face + mine.side)] = global(face_of(p), 3 * theirs.face + theirs.side);
      }
    }
  }
  auto notes = s.provenance();
  notes.push_back(std::to_string(k) + "-subdivision");
  return GluedSurface(faces, std::move(gluing), std::move(notes));
}

GluedSurface unsubdivide(const GluedSurface& s, int k) {
  if (k < 2) throw PreconditionError("unsubdivide requires k >= 2, got " + std::to_string(k));
  const auto& layout = detail::subdivision_layout(k);
  const int block = layout.faces;
  if (s.face_count() % block != 0) {
    throw InvalidSurface("face count " + std::to_string(s.face_count()) + " is not divisible by " +
                         std::to_string(block));
  }
  const int coarse = s.face_count() / block;
  std::vector<DartId> gluing(static_cast<std::size_t>(3 * coarse), kNoDart);
  for (FaceId f = 0; f < coarse; ++f) {
    for (int side = 0; side < 3; ++side) {
      const auto first = layout.pieces[side][0];
      const DartId fine = 3 * block * f + 3 * first.face + first.side;
      const DartId p = s.partner(fine);
      if (p == kNoDart) continue;
      const int local = p - 3 * block * (p / (3 * block));
      const auto where = layout.piece_of[local];
      if (where[0] < 0 || where[1] != k - 1) {
        throw InvalidSurface("surface is not a " + std::to_string(k) + "-subdivision in canonical numbering");
      }
      gluing[make_dart(f, side)] = make_dart(p / (3 * block), where[0]);
    }
  }
  GluedSurface candidate;
  try {
    candidate = GluedSurface(coarse, std::move(gluing));
  } catch (const InvalidSurface&) {
    throw InvalidSurface("surface is not a " + std::to_string(k) + "-subdivision in canonical numbering");
  }
  if (!(subdivide(candidate, k) == s)) {
    throw InvalidSurface("surface is not a " + std::to_string(k) + "-subdivision in canonical numbering");
  }
  auto notes = s.provenance();
  if (!notes.empty() && notes.back() == std::to_string(k) + "-subdivision") notes.pop_back();
  return GluedSurface(coarse, std::vector<DartId>(candidate.gluing().begin(), candidate.gluing().end()),
                      std::move(notes));
}

}  // namespace equilat
