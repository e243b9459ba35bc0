#include <algorithm>
#include <map>

#include "equilat/error.hpp"
#include "equilat/surface.hpp"

namespace equilat {
namespace {

// Breadth-first relabeling of the component containing `start`: the face of
// `start` becomes face 0 with `start` as its side 0, and faces are numbered in
// the order they are first reached. The relabeled gluing array is emitted entry by
// entry and compared against `best` on the fly; the walk stops as soon as it is
// known to be lexicographically larger.
class BreadthFirstRelabeling {
 public:
  explicit BreadthFirstRelabeling(const GluedSurface& s)
      : s_(s),
        label_(static_cast<std::size_t>(s.face_count()), -1),
        entry_side_(static_cast<std::size_t>(s.face_count()), 0) {}

  // Returns true when the emitted sequence is strictly smaller than `best` (which
  // is then replaced) or `best` is empty.
  bool run(DartId start, std::vector<DartId>& best) {
    std::fill(label_.begin(), label_.end(), -1);
    order_.clear();
    out_.clear();
    const bool first = best.empty();
    int cmp = first ? -1 : 0;
    visit(face_of(start), side_of(start));
    for (std::size_t q = 0; q < order_.size(); ++q) {
      const FaceId f = order_[q];
      for (int ns = 0; ns < 3; ++ns) {
        const DartId p = s_.partner(make_dart(f, (ns + entry_side_[f]) % 3));
        DartId value = kNoDart;
        if (p != kNoDart) {
          const FaceId pf = face_of(p);
          if (label_[pf] < 0) visit(pf, side_of(p));
          value = make_dart(label_[pf], (side_of(p) - entry_side_[pf] + 3) % 3);
        }
        if (cmp == 0) {
          const DartId ref = best[out_.size()];
          if (value > ref) return false;
          if (value < ref) cmp = -1;
        }
        out_.push_back(value);
      }
    }
    if (static_cast<int>(order_.size()) != s_.face_count()) {
      throw PreconditionError("canonical form requires a connected surface");
    }
    if (cmp < 0) {
      best = out_;
      return true;
    }
    return false;
  }

 private:
  void visit(FaceId f, int side) {
    label_[f] = static_cast<FaceId>(order_.size());
    entry_side_[f] = side;
    order_.push_back(f);
  }

  const GluedSurface& s_;
  std::vector<FaceId> label_;
  std::vector<int> entry_side_;
  std::vector<FaceId> order_;
  std::vector<DartId> out_;
};

// Start darts whose tail lies in the rarest (boundary, degree) class. The class is
// defined by isomorphism invariants, so minimizing over it stays canonical.
std::vector<DartId> candidate_starts(const GluedSurface& s) {
  const VertexOrbits orbits(s);
  std::map<std::pair<int, int>, int> population;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const auto& v = orbits[orbits.tail(d)];
    ++population[{v.boundary ? 1 : 0, v.degree}];
  }
  std::pair<int, int> chosen{};
  int fewest = -1;
  for (const auto& [key, n] : population) {
    if (fewest < 0 || n < fewest) {
      fewest = n;
      chosen = key;
    }
  }
  std::vector<DartId> out;
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const auto& v = orbits[orbits.tail(d)];
    if (std::pair<int, int>{v.boundary ? 1 : 0, v.degree} == chosen) out.push_back(d);
  }
  return out;
}

}  // namespace

GluedSurface canonical_surface(const GluedSurface& s) {
  if (s.face_count() == 0) return s;
  if (!is_connected(s)) throw PreconditionError("canonical form requires a connected surface");
  BreadthFirstRelabeling walk(s);
  std::vector<DartId> best;
  for (DartId d : candidate_starts(s)) walk.run(d, best);
  return GluedSurface(s.face_count(), std::move(best));
}

std::string canonical_form(const GluedSurface& s) { return to_tsf(canonical_surface(s)); }

bool are_isomorphic(const GluedSurface& a, const GluedSurface& b) {
  if (a.face_count() != b.face_count() || a.boundary_dart_count() != b.boundary_dart_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace equilat
