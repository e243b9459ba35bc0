#include <limits>
#include <numeric>
#include <random>

#include "equilat/error.hpp"
#include "equilat/surface.hpp"

namespace equilat {
namespace {

// Uniform draw in [0, n) by rejection; unlike std::uniform_int_distribution the
// sequence is identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace

GluedSurface random_surface(int face_count, std::uint64_t seed, int max_attempts) {
  if (face_count < 2 || face_count % 2 != 0) {
    throw PreconditionError("random_surface requires an even face count >= 2, got " +
                            std::to_string(face_count));
  }
  std::mt19937_64 rng(seed);
  const int darts = 3 * face_count;
  std::vector<DartId> perm(static_cast<std::size_t>(darts));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = darts - 1; i > 0; --i) {
      const auto j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[i], perm[j]);
    }
    std::vector<DartId> gluing(static_cast<std::size_t>(darts));
    for (int i = 0; i < darts; i += 2) {
      gluing[perm[i]] = perm[i + 1];
      gluing[perm[i + 1]] = perm[i];
    }
    GluedSurface s(face_count, std::move(gluing),
                   {"random T=" + std::to_string(face_count) + " seed=" + std::to_string(seed)});
    if (is_connected(s)) return s;
  }
  throw Error("random_surface: no connected sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace equilat
