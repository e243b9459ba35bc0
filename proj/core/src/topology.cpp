#include <algorithm>
#include <numeric>

#include "equilat/error.hpp"
#include "equilat/surface.hpp"

namespace equilat {

int count_boundary_components(const GluedSurface& s) {
  std::vector<char> seen(static_cast<std::size_t>(s.dart_count()), 0);
  int cycles = 0;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    if (!s.is_boundary(d) || seen[d]) continue;
    ++cycles;
    for (DartId b = d; !seen[b];) {
      seen[b] = 1;
      // Next boundary dart starts at head(b): sweep clockwise from next_in_face(b).
      DartId x = next_in_face(b);
      while (!s.is_boundary(x)) x = next_in_face(s.partner(x));
      b = x;
    }
  }
  return cycles;
}

ComponentSplit split_components(const GluedSurface& s) {
  const int faces = s.face_count();
  ComponentSplit out;
  out.component_of_face.assign(static_cast<std::size_t>(faces), -1);
  out.local_face.assign(static_cast<std::size_t>(faces), -1);
  std::vector<std::vector<FaceId>> members;
  std::vector<FaceId> stack;
  for (FaceId f = 0; f < faces; ++f) {
    if (out.component_of_face[f] != -1) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    out.component_of_face[f] = c;
    stack.push_back(f);
    while (!stack.empty()) {
      const FaceId g = stack.back();
      stack.pop_back();
      members[c].push_back(g);
      for (int side = 0; side < 3; ++side) {
        const DartId p = s.partner(make_dart(g, side));
        if (p == kNoDart) continue;
        const FaceId h = face_of(p);
        if (out.component_of_face[h] == -1) {
          out.component_of_face[h] = c;
          stack.push_back(h);
        }
      }
    }
  }
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < m.size(); ++i) out.local_face[m[i]] = static_cast<FaceId>(i);
  }
  for (const auto& m : members) {
    const int local_faces = static_cast<int>(m.size());
    std::vector<DartId> gluing(static_cast<std::size_t>(3 * local_faces), kNoDart);
    for (int i = 0; i < local_faces; ++i) {
      for (int side = 0; side < 3; ++side) {
        const DartId p = s.partner(make_dart(m[i], side));
        if (p != kNoDart) gluing[make_dart(i, side)] = make_dart(out.local_face[face_of(p)], side_of(p));
      }
    }
    out.components.emplace_back(local_faces, std::move(gluing), s.provenance());
  }
  return out;
}

std::vector<GluedSurface> connected_components(const GluedSurface& s) {
  return split_components(s).components;
}

bool is_connected(const GluedSurface& s) {
  if (s.face_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(s.face_count()), 0);
  std::vector<FaceId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const FaceId f = stack.back();
    stack.pop_back();
    for (int side = 0; side < 3; ++side) {
      const DartId p = s.partner(make_dart(f, side));
      if (p == kNoDart || seen[face_of(p)]) continue;
      seen[face_of(p)] = 1;
      ++reached;
      stack.push_back(face_of(p));
    }
  }
  return reached == s.face_count();
}

EulerReport euler_and_genus(const GluedSurface& s) {
  if (!is_connected(s)) throw PreconditionError("euler_and_genus requires a connected surface");
  EulerReport r;
  r.faces = s.face_count();
  r.vertices = VertexOrbits(s).count();
  r.edges = (s.dart_count() + s.boundary_dart_count()) / 2;
  r.chi = r.vertices - r.edges + r.faces;
  r.boundary_components = count_boundary_components(s);
  const int twice_genus = 2 - r.chi - r.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw InvariantViolation("Euler characteristic " + std::to_string(r.chi) + " with " +
                             std::to_string(r.boundary_components) +
                             " boundary components gives no integer genus");
  }
  r.genus = twice_genus / 2;
  if (s.is_closed()) {
    const int t = r.faces;
    const int g = r.genus;
    if (t % 2 != 0) r.warnings.push_back("closed surface with odd face count");
    if (t < 4 * g - 4) r.warnings.push_back("T < 4g - 4");
    if (2 * g > t) r.warnings.push_back("g/T > 1/2");
  }
  return r;
}

ConformalDouble conformal_double(const GluedSurface& s) {
  if (s.is_closed()) throw PreconditionError("conformal_double requires a surface with boundary");
  const int t = s.face_count();
  // Mirror face t+f has corners (c0, c2, c1) of face f, so its side 2-s runs
  // along original side s in the opposite direction.
  auto mirror_of = [t](DartId d) { return make_dart(face_of(d) + t, 2 - side_of(d)); };
  std::vector<DartId> gluing(static_cast<std::size_t>(6 * t), kNoDart);
  std::vector<DartId> mirror(static_cast<std::size_t>(6 * t), kNoDart);
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const DartId md = mirror_of(d);
    mirror[d] = md;
    mirror[md] = d;
    const DartId p = s.partner(d);
    if (p == kNoDart) {
      gluing[d] = md;
      gluing[md] = d;
    } else {
      gluing[d] = p;
      gluing[md] = mirror_of(p);
    }
  }
  auto notes = s.provenance();
  notes.push_back("conformal double");
  return {GluedSurface(2 * t, std::move(gluing), std::move(notes)), std::move(mirror)};
}

GluedSurface relabel(const GluedSurface& s, std::span<const FaceId> face_map,
                     std::span<const int> rotation) {
  const int t = s.face_count();
  if (face_map.size() != static_cast<std::size_t>(t) || rotation.size() != face_map.size()) {
    throw PreconditionError("relabel: map sizes do not match face count");
  }
  std::vector<char> hit(static_cast<std::size_t>(t), 0);
  for (FaceId f : face_map) {
    if (f < 0 || f >= t || hit[f]) throw PreconditionError("relabel: face map is not a permutation");
    hit[f] = 1;
  }
  auto image = [&](DartId d) {
    const FaceId f = face_of(d);
    return make_dart(face_map[f], ((side_of(d) + rotation[f]) % 3 + 3) % 3);
  };
  std::vector<DartId> gluing(static_cast<std::size_t>(3 * t), kNoDart);
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const DartId p = s.partner(d);
    if (p != kNoDart) gluing[image(d)] = image(p);
  }
  return GluedSurface(t, std::move(gluing), s.provenance());
}

}  // namespace equilat
