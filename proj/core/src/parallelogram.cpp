#include "equilat/parallelogram.hpp"

#include <algorithm>
#include <random>

namespace equilat {
namespace {

class Worklist {
 public:
  explicit Worklist(std::optional<std::uint64_t> seed) {
    if (seed) rng_.emplace(*seed);
  }
  void push(VertexId v) { items_.push_back(v); }
  bool empty() const { return items_.empty(); }
  VertexId pop() {
    std::size_t i = items_.size() - 1;
    if (rng_) i = std::uniform_int_distribution<std::size_t>(0, items_.size() - 1)(*rng_);
    std::swap(items_[i], items_.back());
    const VertexId v = items_.back();
    items_.pop_back();
    return v;
  }

 private:
  std::vector<VertexId> items_;
  std::optional<std::mt19937_64> rng_;
};

// Grows trajectories of weight `dir` from the cone points. Vertices in `stop`
// (other than cone points) are reached but not continued from.
std::vector<std::uint8_t> grow(const GluedSurface& s, const TranslationStructure& st, const VertexOrbits& orbits,
                               int dir, const std::vector<std::uint8_t>* stop, std::optional<std::uint64_t> seed,
                               std::vector<std::uint8_t>& reached) {
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(s.dart_count()), 0);
  reached.assign(static_cast<std::size_t>(orbits.count()), 0);
  std::vector<std::uint8_t> cone(static_cast<std::size_t>(orbits.count()), 0);
  Worklist work(seed);
  for (VertexId v : orbits.above_six()) {
    cone[v] = 1;
    reached[v] = 1;
    work.push(v);
  }
  while (!work.empty()) {
    const VertexId v = work.pop();
    if (stop && (*stop)[v] && !cone[v]) continue;
    for (DartId d : orbits[v].corners) {
      if (st.weight(d).exponent() != dir) continue;
      flags[d] = 1;
      flags[s.partner(d)] = 1;
      const VertexId w = orbits.head(d);
      if (!reached[w]) {
        reached[w] = 1;
        work.push(w);
      }
    }
  }
  return flags;
}

bool horizontal(Root6 r) { return r.exponent() % 3 == 0; }
bool slanted(Root6 r) { return r.exponent() == 1 || r.exponent() == 4; }

}  // namespace

TrajectoryComplex build_trajectories(const GluedSurface& s, const TranslationStructure& st,
                                     std::optional<std::uint64_t> shuffle_seed) {
  const VertexOrbits orbits(s);
  if (orbits.above_six().empty()) throw NoConePoints("no vertex of degree > 6 to start trajectories from");
  TrajectoryComplex a;
  std::vector<std::uint8_t> in_a0, scratch;
  const auto salt = [&](std::uint64_t k) -> std::optional<std::uint64_t> {
    if (!shuffle_seed) return std::nullopt;
    return *shuffle_seed * 3 + k;
  };
  a.a0 = grow(s, st, orbits, 0, nullptr, salt(0), in_a0);
  a.a1 = grow(s, st, orbits, 1, &in_a0, salt(1), scratch);
  a.a2 = grow(s, st, orbits, 4, &in_a0, salt(2), scratch);
  return a;
}

PolytopeB build_polytope(const GluedSurface& s, const TranslationStructure& st, const TrajectoryComplex& a) {
  const VertexOrbits orbits(s);
  PolytopeB b;
  auto note = [&](const std::string& msg) {
    if (b.detail.empty()) b.detail = msg;
  };

  b.edges_have_axis_directions = true;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const Root6 w = st.weight(d);
    if ((a.a0[d] && !horizontal(w)) || ((a.a1[d] || a.a2[d]) && !slanted(w))) {
      b.edges_have_axis_directions = false;
      note("A-edge at dart " + std::to_string(d) + " has weight zeta^" + std::to_string(w.exponent()));
    }
  }

  b.cone_edges_in_a = true;
  for (VertexId v : orbits.above_six()) {
    for (DartId d : orbits[v].corners) {
      const Root6 w = st.weight(d);
      if ((horizontal(w) || slanted(w)) && !a.in_a(d)) {
        b.cone_edges_in_a = false;
        note("edge at dart " + std::to_string(d) + " from a cone point is missing from A");
      }
    }
  }

  std::vector<std::uint8_t> is_b_vertex(static_cast<std::size_t>(orbits.count()), 0);
  for (const auto& v : orbits.vertices()) {
    bool h = false, sl = false;
    for (DartId d : v.corners) {
      if (!a.in_a(d)) continue;
      h = h || horizontal(st.weight(d));
      sl = sl || slanted(st.weight(d));
    }
    if (h && sl) {
      is_b_vertex[v.id] = 1;
      b.vertices.push_back(v.id);
    }
  }

  b.b_vertex_horizontals_in_a = true;
  for (VertexId v : b.vertices) {
    for (DartId d : orbits[v].corners) {
      if (horizontal(st.weight(d)) && !a.in_a(d)) {
        b.b_vertex_horizontals_in_a = false;
        note("horizontal edge at dart " + std::to_string(d) + " from a vertex of B is missing from A");
      }
    }
  }

  const PeriodMap pm = period_map(s, st, orbits.above_six().front());
  b.b_vertex_periods_ok = true;
  for (VertexId v : b.vertices) {
    if (!pm.potential[v].in_sublattice(3)) {
      b.b_vertex_periods_ok = false;
      note("vertex " + std::to_string(v) + " of B has relative period " + pm.potential[v].str());
    }
  }

  // Edges of B: straight runs through vertices outside V(B).
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(s.dart_count()), 0);
  for (VertexId v : b.vertices) {
    for (DartId start : orbits[v].corners) {
      if (!a.in_a(start)) continue;
      PolytopeEdge e;
      e.from = v;
      e.direction = st.weight(start);
      DartId cur = start;
      bool ok = true;
      for (;;) {
        e.darts.push_back(cur);
        const VertexId h = orbits.head(cur);
        if (is_b_vertex[h]) break;
        DartId nxt = kNoDart;
        for (DartId c : orbits[h].corners) {
          if (a.in_a(c) && st.weight(c) == e.direction) nxt = c;
        }
        if (nxt == kNoDart || static_cast<int>(e.darts.size()) > s.dart_count()) {
          ok = false;
          break;
        }
        cur = nxt;
      }
      if (!ok) {
        note("trajectory from dart " + std::to_string(start) + " ends outside V(B)");
        continue;
      }
      e.to = orbits.head(cur);
      // Each edge is found from both ends; keep the copy with the smaller first dart.
      if (start > s.partner(e.darts.back())) continue;
      for (DartId d : e.darts) {
        covered[d] = 1;
        covered[s.partner(d)] = 1;
      }
      b.edges.push_back(std::move(e));
    }
  }
  b.a_covered_by_edges = true;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    if (a.in_a(d) && !covered[d]) {
      b.a_covered_by_edges = false;
      note("A-edge at dart " + std::to_string(d) + " lies on no edge of B");
      break;
    }
  }

  // Faces: triangles connected across edges outside A.
  b.region_of_triangle.assign(static_cast<std::size_t>(s.face_count()), -1);
  for (FaceId f0 = 0; f0 < s.face_count(); ++f0) {
    if (b.region_of_triangle[f0] >= 0) continue;
    const int id = static_cast<int>(b.faces.size());
    FaceRegion region;
    std::vector<FaceId> stack{f0};
    b.region_of_triangle[f0] = id;
    while (!stack.empty()) {
      const FaceId f = stack.back();
      stack.pop_back();
      region.triangles.push_back(f);
      for (int side = 0; side < 3; ++side) {
        const DartId d = make_dart(f, side);
        if (a.in_a(d)) continue;
        const FaceId g = face_of(s.partner(d));
        if (b.region_of_triangle[g] < 0) {
          b.region_of_triangle[g] = id;
          stack.push_back(g);
        }
      }
    }
    std::sort(region.triangles.begin(), region.triangles.end());
    std::vector<DartId> all;
    for (FaceId f : region.triangles)
      for (int side = 0; side < 3; ++side)
        if (a.in_a(make_dart(f, side))) all.push_back(make_dart(f, side));
    if (!all.empty()) {
      DartId d = all.front();
      do {
        region.boundary.push_back(d);
        DartId x = next_in_face(d);
        int fan = 1;
        while (!a.in_a(x)) {
          x = next_in_face(s.partner(x));
          ++fan;
        }
        region.fan.push_back(fan);
        d = x;
      } while (d != all.front() && region.boundary.size() <= all.size());
      region.single_boundary = region.boundary.size() == all.size() && d == all.front();
    } else {
      region.single_boundary = false;
    }
    b.faces.push_back(std::move(region));
  }
  return b;
}

FaceGeometry develop_face(const GluedSurface& s, const TranslationStructure& st, const PolytopeB& b, int face) {
  const VertexOrbits orbits(s);
  const FaceRegion& r = b.faces.at(static_cast<std::size_t>(face));
  FaceGeometry g;
  g.id = face;
  g.triangles = static_cast<int>(r.triangles.size());
  auto note = [&](const std::string& msg) {
    if (g.detail.empty()) g.detail = msg;
  };
  const int n = static_cast<int>(r.boundary.size());
  for (DartId d : r.boundary) g.closure += st.period(d);
  g.closes = r.single_boundary && g.closure.is_zero();
  if (!r.single_boundary) note("region boundary is not a single cycle");
  if (!g.closure.is_zero()) note("boundary development does not close: " + g.closure.str());

  std::vector<int> corner_at;
  g.allowed_pairs = true;
  for (int i = 0; i < n; ++i) {
    const Root6 in = st.weight(r.boundary[i]);
    const Root6 out = st.weight(r.boundary[(i + 1) % n]);
    if ((out.exponent() - in.exponent() - (3 - r.fan[i]) + 36) % 6 != 0) {
      g.closes = false;
      note("turning angle disagrees with the directional weights");
    }
    if (r.fan[i] == 3) continue;
    corner_at.push_back(i);
    const VertexId v = orbits.head(r.boundary[i]);
    g.corners.push_back(v);
    g.corner_degrees.push_back(orbits.degree(v));
    g.corner_angles.push_back(r.fan[i]);
    const int e1 = (in.exponent() + 3) % 6;
    const int e2 = out.exponent();
    const bool allowed = (e1 == 0 && e2 == 4) || (e1 == 4 && e2 == 3) || (e1 == 3 && e2 == 1) || (e1 == 1 && e2 == 0);
    if (!allowed) {
      g.allowed_pairs = false;
      note("corner at vertex " + std::to_string(v) + " has pair (zeta^" + std::to_string(e1) + ", zeta^" +
           std::to_string(e2) + ")");
    }
  }
  const int corners = static_cast<int>(corner_at.size());
  g.four_corners = corners == 4;
  if (!g.four_corners) note(std::to_string(corners) + " corners");

  g.alternating = corners > 0;
  for (int c = 0; c < corners; ++c) {
    const int a1 = g.corner_angles[c];
    const int a2 = g.corner_angles[(c + 1) % corners];
    if (a1 < 1 || a1 > 2 || a1 == a2) g.alternating = false;
  }
  if (!g.alternating) note("corner angles do not alternate between pi/3 and 2pi/3");

  std::vector<std::int64_t> side_len;
  std::vector<Root6> side_dir;
  for (int c = 0; c < corners; ++c) {
    const int from = corner_at[c];
    const int to = corner_at[(c + 1) % corners];
    side_len.push_back(((to - from) % n + n) % n == 0 ? n : ((to - from) % n + n) % n);
    side_dir.push_back(st.weight(r.boundary[(from + 1) % n]));
  }
  g.opposite_sides_equal = false;
  if (corners == 4) {
    g.opposite_sides_equal = side_len[0] == side_len[2] && side_len[1] == side_len[3] &&
                             horizontal(side_dir[0]) != horizontal(side_dir[1]);
    for (int c = 0; c < 4; ++c) (horizontal(side_dir[c]) ? g.length : g.width) = side_len[c];
    if (!g.opposite_sides_equal) note("opposite sides differ");
  }
  g.area = parallelogram_area(g.length, g.width);

  std::vector<std::uint8_t> on_boundary(static_cast<std::size_t>(orbits.count()), 0);
  for (DartId d : r.boundary) on_boundary[orbits.tail(d)] = 1;
  g.flat_interior = true;
  for (FaceId f : r.triangles) {
    for (int side = 0; side < 3; ++side) {
      const VertexId v = orbits.tail(make_dart(f, side));
      if (!on_boundary[v] && orbits.degree(v) != 6) {
        g.flat_interior = false;
        note("vertex " + std::to_string(v) + " of degree " + std::to_string(orbits.degree(v)) + " inside the face");
      }
    }
  }
  g.has_cone_corner = std::any_of(g.corner_degrees.begin(), g.corner_degrees.end(), [](int d) { return d > 6; });
  return g;
}

bool Decomposition::passed() const {
  if (!b.properties_ok() || !face_count_ok || !tiles || !area_ok || !sides_ok || !cone_corners_ok) return false;
  return std::all_of(faces.begin(), faces.end(), [](const FaceGeometry& f) { return f.is_parallelogram(); });
}

Decomposition decompose(const GluedSurface& s, const TranslationStructure& st,
                        std::optional<std::uint64_t> shuffle_seed) {
  if (!s.is_closed() || !is_connected(s)) throw PreconditionError("decompose requires a closed connected surface");
  if (!st.is_valid_on(s)) throw PreconditionError("the translation structure is not valid on this surface");
  Decomposition out;
  out.genus = euler_and_genus(s).genus;
  if (out.genus == 1) throw GenusOneInput("genus 1 surfaces have no cone points to decompose from");
  out.a = build_trajectories(s, st, shuffle_seed);
  out.b = build_polytope(s, st, out.a);
  int triangles = 0;
  std::int64_t area = 0;
  out.sides_ok = true;
  out.cone_corners_ok = true;
  for (int i = 0; i < static_cast<int>(out.b.faces.size()); ++i) {
    out.faces.push_back(develop_face(s, st, out.b, i));
    const FaceGeometry& f = out.faces.back();
    triangles += f.triangles;
    area += f.area.quarters_root3;
    if (f.length < 3 || f.width < 3) out.sides_ok = false;
    if (!f.has_cone_corner) out.cone_corners_ok = false;
    if (out.detail.empty() && !f.is_parallelogram()) out.detail = "face " + std::to_string(i) + ": " + f.detail;
  }
  out.total_area = {area};
  const int faces = static_cast<int>(out.b.faces.size());
  out.face_count_ok = faces <= 12 * (out.genus - 1);
  out.tiles = triangles == s.face_count();
  out.area_ok = area == flat_area(s).quarters_root3;
  if (out.detail.empty()) {
    if (!out.b.properties_ok()) out.detail = out.b.detail;
    else if (!out.face_count_ok) out.detail = std::to_string(faces) + " faces exceed 12(g-1)";
    else if (!out.area_ok) out.detail = "face areas do not sum to the flat area";
    else if (!out.sides_ok) out.detail = "a face has a side shorter than 3";
    else if (!out.cone_corners_ok) out.detail = "a face has no corner of degree > 6";
  }
  return out;
}

}  // namespace equilat
