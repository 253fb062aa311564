#pragma once

namespace shapeid {

/// Integer pixel coordinate; compares lexicographically by (x, y).
struct Pixel {
  int x = 0;
  int y = 0;

  auto operator<=>(const Pixel&) const = default;
};

/// Continuous image-plane coordinate, y pointing down.
struct Point2d {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace shapeid
