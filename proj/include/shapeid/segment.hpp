#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "shapeid/point.hpp"
#include "shapeid/raster_io.hpp"

namespace shapeid {

/// Foreground map with the same dimensions as its source raster.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height);
  BinaryMask(int width, int height, std::vector<std::uint8_t> fg);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool at(int x, int y) const { return fg_[index(x, y)] != 0; }
  void set(int x, int y, bool v) { fg_[index(x, y)] = v ? 1 : 0; }

  /// Out-of-bounds coordinates read as background.
  bool fg_or_bg(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_ && at(x, y);
  }

  const std::vector<std::uint8_t>& data() const noexcept { return fg_; }

  bool operator==(const BinaryMask&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> fg_;
};

struct FixedThreshold {
  int level = 128;
};
struct OtsuThreshold {};

using ThresholdMethod = std::variant<FixedThreshold, OtsuThreshold>;

/// Histogram threshold maximizing between-class variance. The returned
/// level t splits intensities into {v < t} and {v >= t}; equal variances
/// resolve to the lowest t. Throws Error("degenerate histogram") when the
/// image holds a single intensity.
int otsu_level(const Raster& r);

/// Foreground iff intensity >= level. Fixed levels outside [0, 255] throw.
BinaryMask binarize(const Raster& r, ThresholdMethod method = OtsuThreshold{});

/// Keeps only the largest 4-connected foreground component. Ties go to the
/// component whose first pixel comes earliest in row-major order.
/// Throws Error("no object") on an empty mask.
BinaryMask isolate_object(const BinaryMask& m);

/// Foreground pixels with a background or out-of-bounds 4-neighbor, in
/// row-major order. Throws Error("no object") on an empty mask.
std::vector<Pixel> boundary(const BinaryMask& m);

/// Number of foreground pixels.
std::int64_t area(const BinaryMask& m);

}  // namespace shapeid
