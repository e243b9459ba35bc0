#pragma once

#include <string>
#include <vector>

#include "equilat/translation.hpp"

namespace equilat {

// Z/6 sheet transition per dart: crossing dart a from face f at sheet j lands in
// the partner face at sheet j + transition[a]. Transitions are antisymmetric on
// glued pairs and, after the gauge, vanish on a breadth-first spanning tree of
// the dual graph rooted at face 0.
struct Holonomy6 {
  std::vector<int> transition;
  // Sheet offset of each face's reference development.
  std::vector<int> gauge;

  int at(DartId d) const { return transition[static_cast<std::size_t>(d)]; }
};

Holonomy6 holonomy_cocycle(const GluedSurface& s);

// Sum of transitions met while rotating once counterclockwise around v.
int vertex_monodromy(const Holonomy6& h, const VertexReport& v);

struct BranchPoint {
  VertexId vertex = 0;
  int degree = 0;
  // 6 / gcd(6, degree)
  int ramification = 1;
};

struct CoverComponent {
  GluedSurface surface;
  int degree = 0;  // covering degree over S
  int genus = 0;
  // Cover vertices above branch points.
  int critical_points = 0;
  TranslationStructure structure;
  // Base face and sheet of each component face.
  std::vector<FaceId> base_face;
  std::vector<int> sheet;
  std::string canonical;
};

struct BranchedCover {
  // 6T faces; face j*T + f is sheet j over base face f.
  GluedSurface total;
  Holonomy6 holonomy;
  std::vector<BranchPoint> branch_points;
  // Ordered by canonical form.
  std::vector<CoverComponent> components;
};

// Requires a closed connected surface.
BranchedCover canonical_cover(const GluedSurface& s);

struct CoverReport {
  std::vector<std::string> checks;
  std::string failure;  // first violated identity, empty when all hold

  bool passed() const { return failure.empty(); }
};

// Re-derives every identity from scratch (Euler characteristic on each
// component, cycle structure of the sheet maps) and compares with `c`.
CoverReport verify_cover(const GluedSurface& s, const BranchedCover& c);

}  // namespace equilat
