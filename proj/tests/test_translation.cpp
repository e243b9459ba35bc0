#include <doctest.h>

#include <set>

#include "equilat/census.hpp"
#include "equilat/error.hpp"
#include "equilat/translation.hpp"
#include "oracles.hpp"

using namespace equilat;

namespace {

bool all_degrees_divisible_by_6(const GluedSurface& s) {
  for (const VertexOrbits vo(s); const auto& v : vo.vertices())
    if (v.degree % 6 != 0) return false;
  return true;
}

std::vector<GluedSurface> census_upto(int t_max) {
  std::vector<GluedSurface> out;
  for (int t = 2; t <= t_max; t += 2)
    for (const auto& f : enumerate_surfaces(t)) out.push_back(load_surface(f));
  return out;
}

}  // namespace

TEST_CASE("hexagonal torus has six structures") {
  const GluedSurface t = hexagonal_torus();
  const auto st = detect_structures(t);
  REQUIRE(st.size() == 6);
  for (int k = 0; k < 6; ++k) {
    CHECK(st[k].is_valid_on(t));
    CHECK(st[k] == st[0].rotated(k));
  }
  std::set<int> firsts;
  for (const auto& x : st) firsts.insert(x.weight(0).exponent());
  CHECK(firsts.size() == 6);
}

TEST_CASE("no structure on pillowcase or with odd degrees") {
  CHECK(detect_structures(pillowcase()).empty());
  for (const auto& s : census_upto(6)) {
    const auto st = detect_structures(s);
    CHECK((st.size() == 0 || st.size() == 6));
    bool odd = false;
    for (const VertexOrbits vo(s); const auto& v : vo.vertices()) odd = odd || v.degree % 2 == 1;
    if (odd) CHECK(st.empty());
    if (!all_degrees_divisible_by_6(s)) CHECK(st.empty());
  }
  CHECK_THROWS_AS(detect_structures(load_surface("tsf v1\nT 1\n")), PreconditionError);
  CHECK_THROWS_AS(detect_structures(disjoint_union(hexagonal_torus(), hexagonal_torus())), PreconditionError);
}

TEST_CASE("structures exist iff the developing cover splits into six sheets") {
  for (const auto& s : census_upto(8)) {
    const auto sizes = oracle::cover_component_faces(s);
    const bool split = sizes == std::vector<int>(6, s.face_count());
    CHECK(split == !detect_structures(s).empty());
  }
}

TEST_CASE("face types") {
  const GluedSurface t = hexagonal_torus();
  const auto st = detect_structures(t).front();
  auto count_a = [](const std::vector<FaceType>& ft) { return std::count(ft.begin(), ft.end(), FaceType::A); };
  CHECK(count_a(face_types(t, st)) == 1);

  const GluedSurface t2 = subdivide(t, 2);
  const auto st2 = detect_structures(t2).front();
  CHECK(count_a(face_types(t2, st2)) == 4);

  const auto base = face_types(t2, st2);
  const auto by1 = face_types(t2, st2.rotated(1));
  const auto by2 = face_types(t2, st2.rotated(2));
  for (std::size_t f = 0; f < base.size(); ++f) {
    CHECK(by1[f] != base[f]);
    CHECK(by2[f] == base[f]);
  }
}

TEST_CASE("glued faces have opposite types") {
  for (const auto& s : census_upto(8)) {
    const auto all = detect_structures(s);
    if (all.empty()) continue;
    for (const auto& st : all) {
      const auto ft = face_types(s, st);
      for (DartId d = 0; d < s.dart_count(); ++d) {
        CHECK(ft[face_of(d)] != ft[face_of(s.partner(d))]);
        CHECK(st.weight(s.partner(d)) == -st.weight(d));
      }
    }
  }
}

TEST_CASE("edge path periods") {
  const GluedSurface s = subdivide(hexagonal_torus(), 3);
  const auto st = detect_structures(s).front();
  CHECK(edge_path_period(s, st, {}).is_zero());
  for (DartId d = 0; d < s.dart_count(); ++d) {
    const std::vector<DartId> one{d};
    CHECK(edge_path_period(s, st, one).norm() == 1);
    const std::vector<DartId> back{d, s.partner(d)};
    CHECK(edge_path_period(s, st, back).is_zero());
  }
  // Three sides of a face close up.
  const std::vector<DartId> tri{0, 1, 2};
  CHECK(edge_path_period(s, st, tri).is_zero());
  const VertexOrbits orbits(s);
  DartId far = 0;
  while (orbits.tail(far) == orbits.head(0)) ++far;
  const std::vector<DartId> broken{0, far};
  CHECK_THROWS_AS(edge_path_period(s, st, broken), PreconditionError);
}

TEST_CASE("period map") {
  for (const auto& s : census_upto(8)) {
    const auto all = detect_structures(s);
    if (all.empty()) continue;
    const auto& st = all.front();
    const VertexOrbits orbits(s);
    const PeriodMap pm = period_map(s, st, 0);
    CHECK(pm.potential[0].is_zero());
    const int edges = 3 * s.face_count() / 2;
    CHECK(static_cast<int>(pm.cotree.size()) == edges - (orbits.count() - 1));
    for (std::size_t i = 0; i < pm.cotree.size(); ++i) {
      const DartId d = pm.cotree[i];
      CHECK(pm.holonomy[i] == pm.potential[orbits.tail(d)] + st.period(d) - pm.potential[orbits.head(d)]);
    }
    // Tree edges have zero holonomy.
    int tree_edges = 0;
    for (DartId d = 0; d < s.dart_count(); ++d) {
      if ((pm.potential[orbits.tail(d)] + st.period(d) - pm.potential[orbits.head(d)]).is_zero()) ++tree_edges;
    }
    CHECK(tree_edges >= 2 * (orbits.count() - 1));
  }
}

TEST_CASE("locally bounded translation surfaces") {
  const auto torus = is_locally_bounded_tran(hexagonal_torus(), detect_structures(hexagonal_torus()).front());
  CHECK(torus.degree_ok);
  CHECK(torus.no_cone_points);
  CHECK_FALSE(torus.periods_ok);
  CHECK_FALSE(torus.passed());

  int checked = 0;
  for (const auto& s : census_upto(8)) {
    if (detect_structures(s).empty()) continue;
    CHECK_FALSE(is_locally_bounded_tran(s, detect_structures(s).front()).passed());
    const GluedSurface s3 = subdivide(s, 3);
    const auto all = detect_structures(s3);
    REQUIRE(all.size() == 6);
    for (const auto& st : all) {
      const auto r = is_locally_bounded_tran(s3, st);
      CHECK(r.passed());
      CHECK(r.max_degree == VertexOrbits(s).max_degree());
    }
    ++checked;
  }
  CHECK(checked == 15);
}

TEST_CASE("flat area") {
  CHECK(flat_area(hexagonal_torus()).quarters_root3 == 2);
  CHECK(flat_area(GluedSurface()).quarters_root3 == 0);
  const GluedSurface s = random_surface(10, 3);
  for (int k = 2; k <= 4; ++k) CHECK(flat_area(subdivide(s, k)).quarters_root3 == k * k * 10);
}
