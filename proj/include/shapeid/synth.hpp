#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shapeid/point.hpp"
#include "shapeid/raster_io.hpp"
#include "shapeid/shape_class.hpp"

namespace shapeid {

/// Parameters of one filled test shape. Coordinates are continuous pixel
/// coordinates: pixel (i, j) covers [i, i+1) x [j, j+1) and is sampled at its
/// center (i + 0.5, j + 0.5). The y axis points down.
///
/// Which dimension fields are read depends on `kind`:
///   Rectangle, Cylinder   width, height (cylinder adds `bulge` caps above and below)
///   Square                side
///   Rhombus               side, diagonal_ratio (short / long diagonal, in (0, 1])
///   Kite                  long_diagonal, short_diagonal, crossing (fraction of the
///                         long diagonal, from its left end, where the short one crosses)
///   Hemisphere            radius; `center` is the midpoint of the flat edge, the dome
///                         extends downward
///   Triangle, Cone        base, height; apex up, base horizontal (cone adds a `bulge`
///                         half-ellipse below the base)
/// For every other kind `center` is the center of the bounding box before rotation.
struct ShapeSpec {
  ShapeClass kind = ShapeClass::Square;
  Point2d center{128.0, 128.0};

  double width = 0.0;
  double height = 0.0;
  double side = 0.0;
  double diagonal_ratio = 1.0;
  double long_diagonal = 0.0;
  double short_diagonal = 0.0;
  double crossing = 0.5;
  double radius = 0.0;
  double base = 0.0;

  double bulge = 0.0;     ///< cap half-height, cylinder and cone only
  double rotation = 0.0;  ///< degrees, counterclockwise as displayed; quadrilaterals and triangle only
  std::uint8_t fg = 255;
  std::uint8_t bg = 0;

  static ShapeSpec rectangle(Point2d c, double w, double h, double rot = 0.0);
  static ShapeSpec cylinder(Point2d c, double w, double h, double bulge);
  static ShapeSpec square(Point2d c, double side, double rot = 0.0);
  static ShapeSpec rhombus(Point2d c, double side, double ratio, double rot = 0.0);
  static ShapeSpec kite(Point2d c, double long_diag, double short_diag, double crossing,
                        double rot = 0.0);
  static ShapeSpec hemisphere(Point2d c, double r);
  static ShapeSpec triangle(Point2d c, double base, double h, double rot = 0.0);
  static ShapeSpec cone(Point2d c, double base, double h, double bulge);
};

/// Throws std::invalid_argument naming the violated constraint when `spec`
/// cannot be drawn on a width x height canvas.
void validate(const ShapeSpec& spec, int width, int height);

/// True vertices of the polygonal part of the shape (rotation applied):
/// four for quadrilaterals and cylinder (its side/cap junctions), three for
/// triangle and cone (apex last), the two flat-edge endpoints for hemisphere.
std::vector<Point2d> vertices(const ShapeSpec& spec);

/// Analytic area of the filled region.
double analytic_area(const ShapeSpec& spec);

/// Point-in-region test in continuous coordinates (boundary inclusive).
bool contains(const ShapeSpec& spec, Point2d p);

/// Rasterizes by pixel-center sampling, no anti-aliasing.
Raster render(const ShapeSpec& spec, int width, int height);

struct CorpusEntry {
  std::string name;  ///< lowercase class name, e.g. "rectangle"
  ShapeSpec spec;
};

inline constexpr int kCorpusSize = 256;

/// The eight reference shapes for a 256x256 canvas, in table order
/// (Rectangle, Cylinder, Kite, Square, Rhombus, Hemisphere, Triangle, Cone).
std::vector<CorpusEntry> corpus();

/// corpus() scaled by min(width, height) / 256 and recentered on the canvas.
std::vector<CorpusEntry> corpus(int width, int height);

}  // namespace shapeid
