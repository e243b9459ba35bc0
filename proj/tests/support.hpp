#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "equilat/surface.hpp"

namespace testing_support {

// Random orientation-preserving relabeling of s.
inline equilat::GluedSurface shuffled(const equilat::GluedSurface& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<equilat::FaceId> perm(static_cast<std::size_t>(s.face_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rot(perm.size());
  for (auto& r : rot) r = static_cast<int>(rng() % 3);
  return equilat::relabel(s, perm, rot);
}

// Annulus of 2n triangles between an outer and an inner n-cycle.
inline std::vector<std::array<int, 3>> annulus_triangles(int n) {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i < n; ++i) {
    const int x0 = i, x1 = (i + 1) % n, y0 = n + i, y1 = n + (i + 1) % n;
    t.push_back({x0, x1, y0});
    t.push_back({y0, x1, y1});
  }
  return t;
}

}  // namespace testing_support
