#include "shapeid/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shapeid {

namespace {

using std::numbers::pi;

// Vertices in the shape's own frame (center at the origin, before rotation).
std::vector<Point2d> local_polygon(const ShapeSpec& s) {
  switch (s.kind) {
    case ShapeClass::Rectangle:
    case ShapeClass::Cylinder: {
      const double hw = s.width / 2, hh = s.height / 2;
      return {{-hw, -hh}, {hw, -hh}, {hw, hh}, {-hw, hh}};
    }
    case ShapeClass::Square: {
      const double h = s.side / 2;
      return {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
    }
    case ShapeClass::Rhombus: {
      const double long_half = s.side / std::sqrt(1.0 + s.diagonal_ratio * s.diagonal_ratio);
      const double short_half = long_half * s.diagonal_ratio;
      return {{-long_half, 0}, {0, -short_half}, {long_half, 0}, {0, short_half}};
    }
    case ShapeClass::Kite: {
      const double x_cross = -s.long_diagonal / 2 + s.crossing * s.long_diagonal;
      const double h = s.short_diagonal / 2;
      return {{-s.long_diagonal / 2, 0}, {x_cross, -h}, {s.long_diagonal / 2, 0}, {x_cross, h}};
    }
    case ShapeClass::Triangle:
    case ShapeClass::Cone:
      return {{-s.base / 2, s.height / 2}, {s.base / 2, s.height / 2}, {0, -s.height / 2}};
    case ShapeClass::Hemisphere:
      return {{-s.radius, 0}, {s.radius, 0}};
    case ShapeClass::Unknown:
      break;
  }
  return {};
}

bool rotatable(ShapeClass k) {
  return k == ShapeClass::Rectangle || k == ShapeClass::Square || k == ShapeClass::Rhombus ||
         k == ShapeClass::Kite || k == ShapeClass::Triangle;
}

// Counterclockwise as displayed, i.e. with the y axis pointing down.
Point2d rotate(Point2d v, double degrees) {
  const double t = degrees * pi / 180.0;
  const double c = std::cos(t), sn = std::sin(t);
  return {v.x * c + v.y * sn, -v.x * sn + v.y * c};
}

bool in_convex_polygon(const std::vector<Point2d>& poly, Point2d p) {
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2d a = poly[i];
    const Point2d b = poly[(i + 1) % poly.size()];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross > 0) pos = true;
    if (cross < 0) neg = true;
    if (pos && neg) return false;
  }
  return true;
}

// Half-ellipse with semi-axes (a, b) centered at (0, y0) in the local frame,
// on the side of y0 selected by `below`.
bool in_cap(Point2d p, double a, double b, double y0, bool below) {
  if (b <= 0) return false;
  const double dy = p.y - y0;
  if (below ? dy < 0 : dy > 0) return false;
  const double u = p.x / a, v = dy / b;
  return u * u + v * v <= 1.0;
}

struct Box {
  double x0, y0, x1, y1;
};

Box bounds(const ShapeSpec& s) {
  if (s.kind == ShapeClass::Hemisphere) {
    return {s.center.x - s.radius, s.center.y, s.center.x + s.radius, s.center.y + s.radius};
  }
  Box b{1e300, 1e300, -1e300, -1e300};
  for (const auto& v : vertices(s)) {
    b.x0 = std::min(b.x0, v.x);
    b.y0 = std::min(b.y0, v.y);
    b.x1 = std::max(b.x1, v.x);
    b.y1 = std::max(b.y1, v.y);
  }
  if (s.kind == ShapeClass::Cylinder) {
    b.y0 -= s.bulge;
    b.y1 += s.bulge;
  } else if (s.kind == ShapeClass::Cone) {
    b.y1 += s.bulge;
  }
  return b;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid shape: " + what);
}

}  // namespace

ShapeSpec ShapeSpec::rectangle(Point2d c, double w, double h, double rot) {
  ShapeSpec s;
  s.kind = ShapeClass::Rectangle;
  s.center = c;
  s.width = w;
  s.height = h;
  s.rotation = rot;
  return s;
}

ShapeSpec ShapeSpec::cylinder(Point2d c, double w, double h, double bulge) {
  ShapeSpec s;
  s.kind = ShapeClass::Cylinder;
  s.center = c;
  s.width = w;
  s.height = h;
  s.bulge = bulge;
  return s;
}

ShapeSpec ShapeSpec::square(Point2d c, double side, double rot) {
  ShapeSpec s;
  s.kind = ShapeClass::Square;
  s.center = c;
  s.side = side;
  s.rotation = rot;
  return s;
}

ShapeSpec ShapeSpec::rhombus(Point2d c, double side, double ratio, double rot) {
  ShapeSpec s;
  s.kind = ShapeClass::Rhombus;
  s.center = c;
  s.side = side;
  s.diagonal_ratio = ratio;
  s.rotation = rot;
  return s;
}

ShapeSpec ShapeSpec::kite(Point2d c, double long_diag, double short_diag, double crossing,
                          double rot) {
  ShapeSpec s;
  s.kind = ShapeClass::Kite;
  s.center = c;
  s.long_diagonal = long_diag;
  s.short_diagonal = short_diag;
  s.crossing = crossing;
  s.rotation = rot;
  return s;
}

ShapeSpec ShapeSpec::hemisphere(Point2d c, double r) {
  ShapeSpec s;
  s.kind = ShapeClass::Hemisphere;
  s.center = c;
  s.radius = r;
  return s;
}

ShapeSpec ShapeSpec::triangle(Point2d c, double base, double h, double rot) {
  ShapeSpec s;
  s.kind = ShapeClass::Triangle;
  s.center = c;
  s.base = base;
  s.height = h;
  s.rotation = rot;
  return s;
}

ShapeSpec ShapeSpec::cone(Point2d c, double base, double h, double bulge) {
  ShapeSpec s;
  s.kind = ShapeClass::Cone;
  s.center = c;
  s.base = base;
  s.height = h;
  s.bulge = bulge;
  return s;
}

void validate(const ShapeSpec& s, int width, int height) {
  require(width >= 1 && height >= 1, "canvas must be at least 1x1");
  constexpr double kMinDim = 8.0;
  switch (s.kind) {
    case ShapeClass::Rectangle:
    case ShapeClass::Cylinder:
      require(s.width >= kMinDim && s.height >= kMinDim, "width and height must be >= 8 px");
      break;
    case ShapeClass::Square:
      require(s.side >= kMinDim, "side must be >= 8 px");
      break;
    case ShapeClass::Rhombus: {
      require(s.diagonal_ratio > 0 && s.diagonal_ratio <= 1, "diagonal ratio must be in (0, 1]");
      require(s.side >= kMinDim, "side must be >= 8 px");
      const double short_diag =
          2 * s.side * s.diagonal_ratio / std::sqrt(1 + s.diagonal_ratio * s.diagonal_ratio);
      require(short_diag >= kMinDim, "short diagonal must be >= 8 px");
      break;
    }
    case ShapeClass::Kite:
      require(s.long_diagonal >= kMinDim && s.short_diagonal >= kMinDim,
              "kite diagonals must be >= 8 px");
      require(s.crossing > 0 && s.crossing < 1, "kite crossing fraction must be in (0, 1)");
      break;
    case ShapeClass::Hemisphere:
      require(s.radius >= kMinDim, "radius must be >= 8 px");
      break;
    case ShapeClass::Triangle:
    case ShapeClass::Cone:
      require(s.base >= kMinDim && s.height >= kMinDim, "base and height must be >= 8 px");
      break;
    case ShapeClass::Unknown:
      require(false, "kind must be one of the eight shape classes");
  }

  require(s.bulge >= 0, "bulge must be non-negative");
  if (s.kind == ShapeClass::Cylinder) {
    require(s.bulge <= 0.15 * s.height, "cylinder bulge must be <= 0.15 x height");
  } else if (s.kind == ShapeClass::Cone) {
    require(s.bulge <= 0.25 * s.height, "cone bulge must be <= 0.25 x height");
  } else {
    require(s.bulge == 0, "bulge applies to cylinder and cone only");
  }
  require(s.rotation == 0 || rotatable(s.kind),
          "rotation applies to quadrilaterals and triangle only");
  require(std::isfinite(s.center.x) && std::isfinite(s.center.y), "center must be finite");

  const Box b = bounds(s);
  constexpr double kMargin = 2.0;
  require(b.x0 >= kMargin && b.y0 >= kMargin && b.x1 <= width - kMargin &&
              b.y1 <= height - kMargin,
          "shape must fit inside the raster with a 2 px margin");
}

std::vector<Point2d> vertices(const ShapeSpec& s) {
  auto poly = local_polygon(s);
  for (auto& v : poly) {
    const Point2d r = rotate(v, s.rotation);
    v = {s.center.x + r.x, s.center.y + r.y};
  }
  return poly;
}

double analytic_area(const ShapeSpec& s) {
  switch (s.kind) {
    case ShapeClass::Rectangle: return s.width * s.height;
    case ShapeClass::Cylinder: return s.width * s.height + pi * (s.width / 2) * s.bulge;
    case ShapeClass::Square: return s.side * s.side;
    case ShapeClass::Rhombus: {
      const double long_half = s.side / std::sqrt(1.0 + s.diagonal_ratio * s.diagonal_ratio);
      return 2 * long_half * long_half * s.diagonal_ratio;
    }
    case ShapeClass::Kite: return s.long_diagonal * s.short_diagonal / 2;
    case ShapeClass::Hemisphere: return pi * s.radius * s.radius / 2;
    case ShapeClass::Triangle: return s.base * s.height / 2;
    case ShapeClass::Cone: return s.base * s.height / 2 + pi * (s.base / 2) * s.bulge / 2;
    case ShapeClass::Unknown: break;
  }
  return 0.0;
}

bool contains(const ShapeSpec& s, Point2d p) {
  // Undo translation and rotation, then test in the local frame.
  const Point2d local = rotate({p.x - s.center.x, p.y - s.center.y}, -s.rotation);
  switch (s.kind) {
    case ShapeClass::Hemisphere:
      return local.y >= 0 && local.x * local.x + local.y * local.y <= s.radius * s.radius;
    case ShapeClass::Cylinder:
      return in_convex_polygon(local_polygon(s), local) ||
             in_cap(local, s.width / 2, s.bulge, -s.height / 2, false) ||
             in_cap(local, s.width / 2, s.bulge, s.height / 2, true);
    case ShapeClass::Cone:
      return in_convex_polygon(local_polygon(s), local) ||
             in_cap(local, s.base / 2, s.bulge, s.height / 2, true);
    case ShapeClass::Unknown:
      return false;
    default:
      return in_convex_polygon(local_polygon(s), local);
  }
}

Raster render(const ShapeSpec& spec, int width, int height) {
  validate(spec, width, height);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * height, spec.bg);
  const Box b = bounds(spec);
  const int x0 = std::max(0, static_cast<int>(std::floor(b.x0)) - 1);
  const int y0 = std::max(0, static_cast<int>(std::floor(b.y0)) - 1);
  const int x1 = std::min(width - 1, static_cast<int>(std::ceil(b.x1)) + 1);
  const int y1 = std::min(height - 1, static_cast<int>(std::ceil(b.y1)) + 1);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (contains(spec, {x + 0.5, y + 0.5})) {
        px[static_cast<std::size_t>(y) * width + x] = spec.fg;
      }
    }
  }
  return Raster(width, height, std::move(px));
}

std::vector<CorpusEntry> corpus() { return corpus(kCorpusSize, kCorpusSize); }

std::vector<CorpusEntry> corpus(int width, int height) {
  const double k = std::min(width, height) / static_cast<double>(kCorpusSize);
  const Point2d c{width / 2.0, height / 2.0};

  // The hemisphere center sits on a pixel center so the flat edge has a
  // single extreme pixel at each end.
  const double r = std::round(50 * k);
  const Point2d hc{std::floor(width / 2.0) + 0.5, std::floor((height - r) / 2.0) + 0.5};

  std::vector<CorpusEntry> out;
  out.push_back({"rectangle", ShapeSpec::rectangle(c, 120 * k, 80 * k)});
  out.push_back({"cylinder", ShapeSpec::cylinder(c, 80 * k, 120 * k, 12 * k)});
  out.push_back({"kite", ShapeSpec::kite(c, 160 * k, 80 * k, 0.375)});
  out.push_back({"square", ShapeSpec::square(c, 100 * k)});
  out.push_back({"rhombus", ShapeSpec::rhombus(c, 100 * k, 0.75)});
  out.push_back({"hemisphere", ShapeSpec::hemisphere(hc, r)});
  out.push_back({"triangle", ShapeSpec::triangle(c, 120 * k, 100 * k)});
  out.push_back({"cone", ShapeSpec::cone(c, 120 * k, 90 * k, 18 * k)});
  return out;
}

}  // namespace shapeid
