#include "equilat/degree_bound.hpp"

#include <algorithm>
#include <memory>

#include "embedding.hpp"
#include "equilat/error.hpp"

namespace equilat {
namespace {

class DiskCache {
 public:
  const TriangulatedDisk& th(int d) {
    auto& slot = cache_[d];
    if (!slot) slot = std::make_unique<TriangulatedDisk>(build_TH(d));
    return *slot;
  }

 private:
  std::map<int, std::unique_ptr<TriangulatedDisk>> cache_;
};

std::vector<DartId> spokes_from_min(const VertexReport& v) {
  auto spokes = v.corners;
  std::rotate(spokes.begin(), std::min_element(spokes.begin(), spokes.end()), spokes.end());
  return spokes;
}

// TH boundary local dart -> ring index j.
std::map<DartId, int> boundary_index(const TriangulatedDisk& disk) {
  std::map<DartId, int> out;
  for (int j = 0; j < disk.d; ++j) out[disk.boundary()[j]] = j;
  return out;
}

}  // namespace

BoundedDegreeResult bounded_degree_map(const GluedSurface& s) {
  if (!s.is_closed()) throw PreconditionError("bounded_degree_map requires a closed surface");
  if (!is_connected(s)) throw PreconditionError("bounded_degree_map requires a connected surface");
  BoundedDegreeResult r;
  r.genus = euler_and_genus(s).genus;
  r.s1 = subdivide(s, 4);
  const GluedSurface& s1 = r.s1;
  const VertexOrbits orbits(s1);

  DiskCache disks;
  std::vector<int> face_owner(static_cast<std::size_t>(s1.face_count()), -1);
  std::vector<int> vertex_owner(static_cast<std::size_t>(orbits.count()), -1);
  // S1 link dart -> (swap index, ring position).
  std::map<DartId, std::pair<int, int>> link_of;
  auto& swaps = r.provenance.swaps;
  for (const auto& v : orbits.vertices()) {
    if (v.degree <= 7) continue;
    StarSwap sw;
    sw.center = v.id;
    sw.degree = v.degree;
    sw.spokes = spokes_from_min(v);
    const int index = static_cast<int>(swaps.size());
    auto own_vertex = [&](VertexId x) {
      if (vertex_owner[x] >= 0) throw InvariantViolation("closed stars of high-degree vertices overlap after 4-subdivision");
      vertex_owner[x] = index;
    };
    own_vertex(v.id);
    for (int j = 0; j < sw.degree; ++j) {
      const DartId e = sw.spokes[j];
      if (face_owner[face_of(e)] >= 0) throw InvariantViolation("closed stars of high-degree vertices overlap after 4-subdivision");
      face_owner[face_of(e)] = index;
      own_vertex(orbits.head(e));
      link_of[next_in_face(e)] = {index, j};
    }
    swaps.push_back(std::move(sw));
  }
  // A face outside every star must not touch a center, and link edges must face
  // outward; both follow from vertex-disjointness checked above.

  auto& kept = r.provenance.kept;
  std::vector<FaceId> new_id(static_cast<std::size_t>(s1.face_count()), -1);
  for (FaceId f = 0; f < s1.face_count(); ++f) {
    if (face_owner[f] < 0) {
      new_id[f] = static_cast<FaceId>(kept.size());
      kept.push_back(f);
    }
  }
  int total = static_cast<int>(kept.size());
  for (auto& sw : swaps) {
    sw.block_begin = total;
    sw.block_faces = disks.th(sw.degree).surface.face_count();
    total += sw.block_faces;
  }

  std::vector<DartId> gluing(static_cast<std::size_t>(3 * total), kNoDart);
  auto map_outside = [&](DartId d1) -> DartId {
    const FaceId nf = new_id[face_of(d1)];
    if (nf >= 0) return make_dart(nf, side_of(d1));
    const auto it = link_of.find(d1);
    if (it == link_of.end()) throw InvariantViolation("star face glued across a non-link edge");
    const auto& sw = swaps[it->second.first];
    return 3 * sw.block_begin + disks.th(sw.degree).boundary()[it->second.second];
  };
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int side = 0; side < 3; ++side) {
      gluing[make_dart(static_cast<FaceId>(i), side)] = map_outside(s1.partner(make_dart(kept[i], side)));
    }
  }
  std::vector<std::string> notes = s1.provenance();
  for (const auto& sw : swaps) {
    const TriangulatedDisk& th = disks.th(sw.degree);
    const DartId base = 3 * sw.block_begin;
    for (DartId ld = 0; ld < th.surface.dart_count(); ++ld) {
      const DartId p = th.surface.partner(ld);
      if (p != kNoDart) gluing[base + ld] = base + p;
    }
    for (int j = 0; j < sw.degree; ++j) {
      const DartId outer = s1.partner(next_in_face(sw.spokes[j]));
      if (face_owner[face_of(outer)] >= 0) throw InvariantViolation("two replaced stars share a link edge");
      gluing[base + th.boundary()[j]] = map_outside(outer);
    }
    notes.push_back("TH_" + std::to_string(sw.degree) + " replacement at vertex " + std::to_string(sw.center));
  }
  r.s2 = GluedSurface(total, std::move(gluing), std::move(notes));
  r.b = subdivide(r.s2, 3);
  r.provenance.original_faces = s.face_count();

  const VertexOrbits before(s);
  const VertexOrbits after(r.b);
  r.max_degree = after.max_degree();
  r.v_ne6_before = static_cast<int>(before.not_six().size());
  r.v_ne6_after = static_cast<int>(after.not_six().size());
  r.sigma = static_cast<double>(r.b.face_count()) / s.face_count();
  const int denom = r.v_ne6_before + r.genus;
  r.mu = denom > 0 ? static_cast<double>(r.v_ne6_after) / denom : 0.0;

  if (r.max_degree > 7) throw InvariantViolation("B(S) has a vertex of degree " + std::to_string(r.max_degree));
  if (!is_connected(r.b)) throw InvariantViolation("B(S) is disconnected");
  const int genus_b = euler_and_genus(r.b).genus;
  if (genus_b != r.genus) {
    throw InvariantViolation("B(S) has genus " + std::to_string(genus_b) + ", expected " + std::to_string(r.genus));
  }
  return r;
}

GluedSurface undo_star_swaps(const GluedSurface& s2, const DegreeMapProvenance& prov) {
  const int s1_faces = 16 * prov.original_faces;
  DiskCache disks;
  std::map<int, std::map<DartId, int>> ring_index;
  int expected = static_cast<int>(prov.kept.size());
  for (const auto& sw : prov.swaps) {
    if (sw.block_begin != expected) throw InvalidSurface("provenance blocks are not contiguous");
    expected += disks.th(sw.degree).surface.face_count();
  }
  if (expected != s2.face_count()) throw InvalidSurface("surface size does not match the provenance");

  std::vector<DartId> gluing(static_cast<std::size_t>(3 * s1_faces), kNoDart);
  auto set_pair = [&](DartId a, DartId b) {
    gluing[a] = b;
    gluing[b] = a;
  };
  // S2 dart -> S1 dart, for darts of kept faces and TH boundary darts.
  auto to_s1 = [&](DartId d2) -> DartId {
    const FaceId f = face_of(d2);
    if (f < static_cast<FaceId>(prov.kept.size())) return make_dart(prov.kept[f], side_of(d2));
    for (const auto& sw : prov.swaps) {
      if (f < sw.block_begin || f >= sw.block_begin + sw.block_faces) continue;
      auto& index = ring_index[sw.degree];
      if (index.empty()) index = boundary_index(disks.th(sw.degree));
      const auto it = index.find(d2 - 3 * sw.block_begin);
      if (it == index.end()) throw InvalidSurface("kept face glued into the interior of a TH block");
      return next_in_face(sw.spokes[it->second]);
    }
    throw InvalidSurface("dart outside every block");
  };
  for (const auto& sw : prov.swaps) {
    const TriangulatedDisk& th = disks.th(sw.degree);
    const DartId base = 3 * sw.block_begin;
    for (DartId ld = 0; ld < th.surface.dart_count(); ++ld) {
      const DartId p = th.surface.partner(ld);
      if (p != kNoDart && s2.partner(base + ld) != base + p) {
        throw InvalidSurface("TH block at face " + std::to_string(sw.block_begin) + " does not match TH_" +
                             std::to_string(sw.degree));
      }
    }
    for (int j = 0; j < sw.degree; ++j) {
      set_pair(prev_in_face(sw.spokes[j]), sw.spokes[(j + 1) % sw.degree]);
      set_pair(next_in_face(sw.spokes[j]), to_s1(s2.partner(base + th.boundary()[j])));
    }
  }
  for (std::size_t i = 0; i < prov.kept.size(); ++i) {
    for (int side = 0; side < 3; ++side) {
      const DartId p = s2.partner(make_dart(static_cast<FaceId>(i), side));
      if (p == kNoDart) throw InvalidSurface("S2 has boundary");
      gluing[make_dart(prov.kept[i], side)] = to_s1(p);
    }
  }
  return GluedSurface(s1_faces, std::move(gluing), {"4-subdivision"});
}

GluedSurface recover_original(const GluedSurface& b, const DegreeMapProvenance& prov) {
  const GluedSurface s2 = unsubdivide(b, 3);
  const GluedSurface s1 = undo_star_swaps(s2, prov);
  const GluedSurface s = unsubdivide(s1, 4);
  return GluedSurface(s.face_count(), std::vector<DartId>(s.gluing().begin(), s.gluing().end()),
                      {"recovered from B(S)"});
}

std::map<VertexId, std::set<int>> th_center_candidates(const GluedSurface& s) {
  if (!s.is_closed()) throw PreconditionError("th_center_candidates requires a closed surface");
  const VertexOrbits orbits(s);
  std::map<VertexId, std::set<int>> out;
  detail::FaceStamp stamp(s.face_count());
  std::vector<int> seen(static_cast<std::size_t>(orbits.count()), -1);
  int epoch = 0;

  for (int d = 8;; ++d) {
    const TriangulatedDisk th = build_TH(d);
    if (th.surface.face_count() > s.face_count()) break;
    const int center_degree = th.ring_sizes.back();
    const VertexOrbits model(th.surface);
    for (const auto& v : orbits.vertices()) {
      if (v.degree != center_degree) continue;
      for (DartId target : v.corners) {
        const auto img = detail::embed_model(th.surface, th.center_dart, s, target, stamp);
        if (!img) continue;
        // Vertex-injective, boundary degrees raised by exactly 3, flat ring outside.
        ++epoch;
        std::vector<VertexId> image_vertex(static_cast<std::size_t>(model.count()));
        bool ok = true;
        for (const auto& mv : model.vertices()) {
          const VertexId x = orbits.tail(detail::image_of(*img, mv.corners.front()));
          if (seen[x] == epoch) {
            ok = false;
            break;
          }
          seen[x] = epoch;
          image_vertex[mv.id] = x;
          if (mv.boundary && orbits.degree(x) != mv.degree + 3) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (const auto& mv : model.vertices()) {
          if (!mv.boundary) continue;
          for (DartId e : orbits[image_vertex[mv.id]].corners) {
            const VertexId w = orbits.head(e);
            if (seen[w] != epoch && orbits.degree(w) != 6) ok = false;
          }
        }
        if (ok) {
          out[v.id].insert(d);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace equilat
