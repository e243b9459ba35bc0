#pragma once

#include <span>
#include <string>
#include <vector>

#include "equilat/eisenstein.hpp"
#include "equilat/surface.hpp"

namespace equilat {

enum class FaceType { A, B };

// Directional weights zeta(e, v) stored per dart: weight(d) is the direction of the
// edge under d seen from the tail of d. Inside a face the darts carry k, k+2, k+4;
// faces with even k are Type A, odd k Type B. Glued darts carry opposite weights.
class TranslationStructure {
 public:
  TranslationStructure() = default;
  explicit TranslationStructure(std::vector<Root6> weights) : weights_(std::move(weights)) {}

  Root6 weight(DartId d) const { return weights_[static_cast<std::size_t>(d)]; }
  Eisenstein period(DartId d) const { return weight(d).value(); }
  FaceType face_type(FaceId f) const {
    return weight(make_dart(f, 0)).exponent() % 2 == 0 ? FaceType::A : FaceType::B;
  }
  std::size_t dart_count() const { return weights_.size(); }

  // Multiplies every weight by zeta^k.
  TranslationStructure rotated(int k) const;

  // Checks both compatibility conditions on `s`.
  bool is_valid_on(const GluedSurface& s) const;

  friend bool operator==(const TranslationStructure&, const TranslationStructure&) = default;

 private:
  std::vector<Root6> weights_;
};

// All combinatorial translation structures on a closed connected surface: either
// none or exactly six (the zeta^k rotations of one). Throws PreconditionError for
// surfaces with boundary or disconnected input.
std::vector<TranslationStructure> detect_structures(const GluedSurface& s);

std::vector<FaceType> face_types(const GluedSurface& s, const TranslationStructure& st);

// Sum of edge periods along a walk of darts. Throws PreconditionError when
// consecutive darts do not share a vertex.
Eisenstein edge_path_period(const GluedSurface& s, const TranslationStructure& st,
                            std::span<const DartId> path);

// Developing map along a breadth-first spanning tree of the 1-skeleton.
struct PeriodMap {
  VertexId base = 0;
  // Period of the tree path from the base vertex.
  std::vector<Eisenstein> potential;
  // One dart per co-tree edge, with the period of the closed loop it closes.
  std::vector<DartId> cotree;
  std::vector<Eisenstein> holonomy;
};

PeriodMap period_map(const GluedSurface& s, const TranslationStructure& st, VertexId base);

struct LocallyBoundedReport {
  int max_degree = 0;
  bool degree_ok = false;
  // No vertex of degree > 6: only loop holonomies are checked.
  bool no_cone_points = false;
  int relative_generators = 0;
  int loop_generators = 0;
  bool periods_ok = false;
  std::string detail;

  bool passed() const { return degree_ok && periods_ok; }
};

// Membership test for locally bounded translation surfaces: max degree <= 42 and
// every generator of H_1(S, V_{>6}) has period in 3Z + 3wZ.
LocallyBoundedReport is_locally_bounded_tran(const GluedSurface& s, const TranslationStructure& st);

// Flat area of S, exactly T * sqrt(3)/4.
TriangleArea flat_area(const GluedSurface& s);

}  // namespace equilat
