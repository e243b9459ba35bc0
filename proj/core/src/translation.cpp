#include "equilat/translation.hpp"

#include <queue>

#include "equilat/error.hpp"

namespace equilat {

TranslationStructure TranslationStructure::rotated(int k) const {
  std::vector<Root6> w;
  w.reserve(weights_.size());
  for (Root6 x : weights_) w.push_back(x * Root6(k));
  return TranslationStructure(std::move(w));
}

bool TranslationStructure::is_valid_on(const GluedSurface& s) const {
  if (weights_.size() != static_cast<std::size_t>(s.dart_count())) return false;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    // Counterclockwise-successive edges at a corner differ by zeta.
    if (weight(next_in_face(d)).exponent() != (weight(d).exponent() + 2) % 6) return false;
    const DartId p = s.partner(d);
    if (p != kNoDart && !(weight(p) == -weight(d))) return false;
  }
  return true;
}

std::vector<TranslationStructure> detect_structures(const GluedSurface& s) {
  if (!s.is_closed()) throw PreconditionError("translation structures are defined for closed surfaces only");
  if (!is_connected(s)) throw PreconditionError("detect_structures requires a connected surface");
  const int faces = s.face_count();
  // Weight of side 0 of each face; the other sides follow.
  std::vector<int> base(static_cast<std::size_t>(faces), -1);
  base[0] = 0;
  std::queue<FaceId> queue;
  queue.push(0);
  auto weight_of = [&](DartId d) { return (base[face_of(d)] + 2 * side_of(d)) % 6; };
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop();
    for (int side = 0; side < 3; ++side) {
      const DartId d = make_dart(f, side);
      const DartId p = s.partner(d);
      const int want = (weight_of(d) + 3) % 6;
      const FaceId g = face_of(p);
      const int implied = ((want - 2 * side_of(p)) % 6 + 6) % 6;
      if (base[g] < 0) {
        base[g] = implied;
        queue.push(g);
      } else if (base[g] != implied) {
        return {};
      }
    }
  }
  std::vector<Root6> weights(static_cast<std::size_t>(s.dart_count()));
  for (DartId d = 0; d < s.dart_count(); ++d) weights[d] = Root6(weight_of(d));
  TranslationStructure first(std::move(weights));

  const VertexOrbits orbits(s);
  for (const auto& v : orbits.vertices()) {
    if (v.degree % 6 != 0) {
      throw InvariantViolation("translation structure found on a surface with a vertex of degree " +
                               std::to_string(v.degree));
    }
  }
  std::vector<TranslationStructure> out;
  for (int k = 0; k < 6; ++k) out.push_back(first.rotated(k));
  return out;
}

std::vector<FaceType> face_types(const GluedSurface& s, const TranslationStructure& st) {
  std::vector<FaceType> out(static_cast<std::size_t>(s.face_count()));
  for (FaceId f = 0; f < s.face_count(); ++f) out[f] = st.face_type(f);
  return out;
}

Eisenstein edge_path_period(const GluedSurface& s, const TranslationStructure& st,
                            std::span<const DartId> path) {
  Eisenstein total;
  if (path.empty()) return total;
  const VertexOrbits orbits(s);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const DartId d = path[i];
    if (d < 0 || d >= s.dart_count()) throw PreconditionError("path dart out of range");
    if (i > 0 && orbits.head(path[i - 1]) != orbits.tail(d)) {
      throw PreconditionError("edge walk is disconnected at step " + std::to_string(i));
    }
    total += st.period(d);
  }
  return total;
}

PeriodMap period_map(const GluedSurface& s, const TranslationStructure& st, VertexId base) {
  const VertexOrbits orbits(s);
  PeriodMap pm;
  pm.base = base;
  pm.potential.assign(static_cast<std::size_t>(orbits.count()), Eisenstein{});
  std::vector<char> reached(static_cast<std::size_t>(orbits.count()), 0);
  std::vector<char> tree_edge(static_cast<std::size_t>(s.dart_count()), 0);
  std::queue<VertexId> queue;
  reached[base] = 1;
  queue.push(base);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (DartId d : orbits[v].corners) {
      const VertexId w = orbits.head(d);
      if (reached[w]) continue;
      reached[w] = 1;
      pm.potential[w] = pm.potential[v] + st.period(d);
      tree_edge[d] = 1;
      if (s.partner(d) != kNoDart) tree_edge[s.partner(d)] = 1;
      queue.push(w);
    }
  }
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const DartId p = s.partner(d);
    if (tree_edge[d] || (p != kNoDart && p < d)) continue;
    pm.cotree.push_back(d);
    pm.holonomy.push_back(pm.potential[orbits.tail(d)] + st.period(d) - pm.potential[orbits.head(d)]);
  }
  return pm;
}

LocallyBoundedReport is_locally_bounded_tran(const GluedSurface& s, const TranslationStructure& st) {
  if (!s.is_closed() || !is_connected(s)) {
    throw PreconditionError("is_locally_bounded_tran requires a closed connected surface");
  }
  const VertexOrbits orbits(s);
  LocallyBoundedReport r;
  r.max_degree = orbits.max_degree();
  r.degree_ok = r.max_degree <= 42;
  const auto cones = orbits.above_six();
  r.no_cone_points = cones.empty();
  const PeriodMap pm = period_map(s, st, cones.empty() ? 0 : cones.front());
  r.periods_ok = true;
  for (VertexId v : cones) {
    ++r.relative_generators;
    if (!pm.potential[v].in_sublattice(3)) {
      r.periods_ok = false;
      if (r.detail.empty()) {
        r.detail = "relative period to vertex " + std::to_string(v) + " is " + pm.potential[v].str();
      }
    }
  }
  for (std::size_t i = 0; i < pm.cotree.size(); ++i) {
    ++r.loop_generators;
    if (!pm.holonomy[i].in_sublattice(3)) {
      r.periods_ok = false;
      if (r.detail.empty()) {
        r.detail = "loop through dart " + std::to_string(pm.cotree[i]) + " has period " + pm.holonomy[i].str();
      }
    }
  }
  if (!r.degree_ok && r.detail.empty()) r.detail = "max degree " + std::to_string(r.max_degree) + " > 42";
  if (r.no_cone_points) {
    r.detail += r.detail.empty() ? "" : "; ";
    r.detail += "no vertex of degree > 6, only loop periods checked";
  }
  return r;
}

TriangleArea flat_area(const GluedSurface& s) { return {s.face_count()}; }

}  // namespace equilat
