#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equilat/surface.hpp"

namespace equilat::detail {

struct FaceImage {
  FaceId face = 0;
  int rotation = 0;
};

inline DartId image_of(const std::vector<FaceImage>& img, DartId model_dart) {
  const FaceImage& f = img[static_cast<std::size_t>(face_of(model_dart))];
  return make_dart(f.face, (side_of(model_dart) + f.rotation) % 3);
}

// Reusable scratch marking target faces already used by the current attempt.
class FaceStamp {
 public:
  explicit FaceStamp(int faces) : stamp_(static_cast<std::size_t>(faces), 0) {}
  void next_epoch() { ++epoch_; }
  bool claim(FaceId f) {
    auto& slot = stamp_[static_cast<std::size_t>(f)];
    if (slot == epoch_) return false;
    slot = epoch_;
    return true;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// Face-injective, gluing-compatible map of a connected model surface into `s`
// sending `model_start` to `target`. Every glued pair of the model must map to a
// glued pair of `s`; model boundary darts are unconstrained.
inline std::optional<std::vector<FaceImage>> embed_model(const GluedSurface& model, DartId model_start,
                                                         const GluedSurface& s, DartId target,
                                                         FaceStamp& stamp) {
  stamp.next_epoch();
  std::vector<FaceImage> img(static_cast<std::size_t>(model.face_count()), FaceImage{-1, 0});
  std::vector<FaceId> queue;
  queue.reserve(static_cast<std::size_t>(model.face_count()));
  const FaceId f0 = face_of(model_start);
  img[f0] = {face_of(target), (side_of(target) - side_of(model_start) + 3) % 3};
  stamp.claim(face_of(target));
  queue.push_back(f0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const FaceId f = queue[q];
    for (int side = 0; side < 3; ++side) {
      const DartId m = make_dart(f, side);
      const DartId mp = model.partner(m);
      if (mp == kNoDart) continue;
      const DartId p = s.partner(image_of(img, m));
      if (p == kNoDart) return std::nullopt;
      const FaceId g = face_of(mp);
      const FaceImage want{face_of(p), (side_of(p) - side_of(mp) + 3) % 3};
      if (img[g].face < 0) {
        if (!stamp.claim(want.face)) return std::nullopt;
        img[g] = want;
        queue.push_back(g);
      } else if (img[g].face != want.face || img[g].rotation != want.rotation) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != model.face_count()) return std::nullopt;
  return img;
}

}  // namespace equilat::detail
