#include "equilat/branched_cover.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "equilat/degree_bound.hpp"
#include "equilat/error.hpp"

namespace equilat {
namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }

int lcm6(int d) { return std::lcm(d, 6); }

}  // namespace

Holonomy6 holonomy_cocycle(const GluedSurface& s) {
  if (!s.is_closed()) throw PreconditionError("holonomy_cocycle requires a closed surface");
  Holonomy6 h;
  h.transition.assign(static_cast<std::size_t>(s.dart_count()), 0);
  // The local branch on face f at sheet j gives side s the direction j + 2s; the
  // partner side must point the opposite way.
  for (DartId a = 0; a < s.dart_count(); ++a) {
    const DartId p = s.partner(a);
    h.transition[a] = mod6(2 * side_of(a) - 2 * side_of(p) + 3);
  }
  h.gauge.assign(static_cast<std::size_t>(s.face_count()), -1);
  if (s.face_count() == 0) return h;
  std::queue<FaceId> queue;
  h.gauge[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop();
    for (int side = 0; side < 3; ++side) {
      const DartId a = make_dart(f, side);
      const FaceId g = face_of(s.partner(a));
      if (h.gauge[g] >= 0) continue;
      h.gauge[g] = mod6(h.gauge[f] + h.transition[a]);
      queue.push(g);
    }
  }
  if (std::find(h.gauge.begin(), h.gauge.end(), -1) != h.gauge.end()) {
    throw PreconditionError("holonomy_cocycle requires a connected surface");
  }
  for (DartId a = 0; a < s.dart_count(); ++a) {
    const FaceId g = face_of(s.partner(a));
    h.transition[a] = mod6(h.transition[a] + h.gauge[face_of(a)] - h.gauge[g]);
  }
  return h;
}

int vertex_monodromy(const Holonomy6& h, const VertexReport& v) {
  int total = 0;
  for (DartId c : v.corners) total += h.at(prev_in_face(c));
  return mod6(total);
}

BranchedCover canonical_cover(const GluedSurface& s) {
  if (!s.is_closed() || !is_connected(s)) {
    throw PreconditionError("canonical_cover requires a closed connected surface");
  }
  BranchedCover c;
  c.holonomy = holonomy_cocycle(s);
  const int t = s.face_count();
  std::vector<DartId> gluing(static_cast<std::size_t>(18 * t));
  for (int j = 0; j < 6; ++j) {
    for (DartId a = 0; a < s.dart_count(); ++a) {
      const DartId p = s.partner(a);
      const int k = mod6(j + c.holonomy.at(a));
      gluing[make_dart(j * t + face_of(a), side_of(a))] = make_dart(k * t + face_of(p), side_of(p));
    }
  }
  c.total = GluedSurface(6 * t, std::move(gluing), {"canonical 6-cover"});

  const VertexOrbits base(s);
  for (const auto& v : base.vertices()) {
    if (v.degree % 6 != 0) c.branch_points.push_back({v.id, v.degree, 6 / std::gcd(6, v.degree)});
  }

  const ComponentSplit split = split_components(c.total);
  c.components.resize(split.components.size());
  for (std::size_t i = 0; i < split.components.size(); ++i) {
    CoverComponent& comp = c.components[i];
    comp.surface = split.components[i];
    const int faces = comp.surface.face_count();
    comp.base_face.resize(static_cast<std::size_t>(faces));
    comp.sheet.resize(static_cast<std::size_t>(faces));
    for (FaceId g = 0; g < c.total.face_count(); ++g) {
      if (split.component_of_face[g] != static_cast<int>(i)) continue;
      comp.base_face[split.local_face[g]] = g % t;
      comp.sheet[split.local_face[g]] = g / t;
    }
    std::vector<Root6> weights(static_cast<std::size_t>(3 * faces));
    for (FaceId f = 0; f < faces; ++f) {
      for (int side = 0; side < 3; ++side) {
        weights[make_dart(f, side)] = Root6(comp.sheet[f] + c.holonomy.gauge[comp.base_face[f]] + 2 * side);
      }
    }
    comp.structure = TranslationStructure(std::move(weights));
    comp.degree = faces / t;
    comp.genus = euler_and_genus(comp.surface).genus;
    const VertexOrbits orbits(comp.surface);
    for (const auto& v : orbits.vertices()) {
      const DartId corner = v.corners.front();
      const VertexId below = base.tail(make_dart(comp.base_face[face_of(corner)], side_of(corner)));
      if (base.degree(below) % 6 != 0) ++comp.critical_points;
    }
    comp.canonical = canonical_form(comp.surface);
  }
  std::stable_sort(c.components.begin(), c.components.end(),
                   [](const CoverComponent& a, const CoverComponent& b) { return a.canonical < b.canonical; });
  return c;
}

CoverReport verify_cover(const GluedSurface& s, const BranchedCover& c) {
  CoverReport r;
  auto check = [&](bool ok, const std::string& what) {
    r.checks.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok && r.failure.empty()) r.failure = what;
  };
  const int t = s.face_count();
  const VertexOrbits base(s);
  const int g = euler_and_genus(s).genus;
  const int m = static_cast<int>(base.not_six().size());

  check(c.components.size() <= 6, "at most six components (" + std::to_string(c.components.size()) + ")");
  int degree_sum = 0;
  for (const auto& comp : c.components) degree_sum += comp.surface.face_count() / t;
  check(degree_sum == 6, "component degrees sum to 6 (" + std::to_string(degree_sum) + ")");

  // Ramification from the cycle structure of the sheet permutation at each vertex.
  int branch_count = 0;
  for (const auto& v : base.vertices()) {
    const int mono = vertex_monodromy(c.holonomy, v);
    check(mono == v.degree % 6, "monodromy at vertex " + std::to_string(v.id) + " equals degree mod 6");
    std::vector<int> cycle_len;
    std::vector<bool> seen(6, false);
    for (int j = 0; j < 6; ++j) {
      if (seen[j]) continue;
      int len = 0;
      for (int x = j; !seen[x]; x = mod6(x + mono)) {
        seen[x] = true;
        ++len;
      }
      cycle_len.push_back(len);
    }
    const bool uniform = std::all_of(cycle_len.begin(), cycle_len.end(), [&](int l) { return l == cycle_len[0]; });
    const int e = cycle_len[0];
    check(uniform && e == 6 / std::gcd(6, v.degree),
          "ramification index " + std::to_string(e) + " at vertex " + std::to_string(v.id));
    if (e > 1) {
      ++branch_count;
      const auto it = std::find_if(c.branch_points.begin(), c.branch_points.end(),
                                   [&](const BranchPoint& b) { return b.vertex == v.id; });
      check(it != c.branch_points.end() && it->ramification == e,
            "branch table entry for vertex " + std::to_string(v.id));
    }
  }
  check(branch_count == static_cast<int>(c.branch_points.size()), "branch table size");

  const auto base_structures = detect_structures(s);
  const bool lb_input = base.max_degree() <= 7 && t % 9 == 0 && check_tri_lb(s).positive();
  const std::string base_form = base_structures.empty() ? std::string() : canonical_form(s);

  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const CoverComponent& comp = c.components[i];
    const std::string tag = "component " + std::to_string(i) + ": ";
    const GluedSurface& x = comp.surface;
    const VertexOrbits orbits(x);
    const int faces = x.face_count();
    const int edges = 3 * faces / 2;
    const int chi = orbits.count() - edges + faces;
    const int genus = (2 - chi) / 2;
    const int d = faces / t;
    check(faces % t == 0 && d == comp.degree, tag + "covering degree " + std::to_string(d));
    check(genus == comp.genus, tag + "genus by Euler characteristic " + std::to_string(genus));
    check(faces <= 6 * t, tag + "at most 6T faces");
    check(genus <= 6 * g + 5 * m, tag + "genus at most 6g + 5m");

    int critical = 0;
    bool degrees_ok = true;
    for (const auto& v : orbits.vertices()) {
      const DartId corner = v.corners.front();
      const VertexId below = base.tail(make_dart(comp.base_face[face_of(corner)], side_of(corner)));
      const int bd = base.degree(below);
      if (bd % 6 != 0) ++critical;
      if (v.degree % 6 != 0 || v.degree != lcm6(bd)) degrees_ok = false;
    }
    check(degrees_ok, tag + "vertex degrees equal lcm(deg, 6)");
    check(critical == comp.critical_points, tag + "critical point count " + std::to_string(critical));
    const int n = branch_count;
    const int lhs = 2 * genus - 2 + critical;
    const int rhs = d * (2 * g - 2) + d * n;
    check(lhs == rhs, tag + "Riemann-Hurwitz " + std::to_string(lhs) + " = " + std::to_string(rhs));

    check(comp.structure.is_valid_on(x), tag + "stored translation structure is valid");
    const auto structures = detect_structures(x);
    check(structures.size() == 6, tag + "admits exactly 6 translation structures");
    if (lb_input) {
      const auto lb = is_locally_bounded_tran(x, comp.structure);
      check(lb.passed(), tag + "locally bounded translation surface" + (lb.detail.empty() ? "" : " (" + lb.detail + ")"));
    }
    if (!base_structures.empty()) {
      check(comp.canonical == base_form, tag + "isomorphic to the base translation surface");
    }
  }
  if (!base_structures.empty()) {
    check(c.components.size() == 6, "translation surface splits into 6 sheets");
  }
  return r;
}

}  // namespace equilat
