#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace shapeid {

/// 8-bit grayscale image, row-major. Immutable once constructed.
class Raster {
 public:
  Raster() = default;

  /// Image filled with `value`.
  Raster(int width, int height, std::uint8_t value = 0);

  /// Takes ownership of `pixels`; throws std::invalid_argument unless
  /// pixels.size() == width * height and both dimensions are >= 1.
  Raster(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }

  bool operator==(const Raster&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Parses a P2 (ASCII) or P5 (binary) PGM. `#` comments are allowed
/// between header tokens. Pixel values are kept as stored, without
/// rescaling to the maxval. Throws PgmError with the failing byte offset.
Raster load_pgm(std::span<const std::uint8_t> bytes);

/// Encodes with maxval 255. P5 when `binary`, otherwise P2 with one row
/// per line.
std::vector<std::uint8_t> write_pgm(const Raster& r, bool binary);

Raster read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const Raster& r, bool binary = true);

}  // namespace shapeid
