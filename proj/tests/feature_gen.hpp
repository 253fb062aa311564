#pragma once

// Random corner sets in the shapes the classifier knows, plus noise quads,
// for label properties under scaling.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "shapeid/geometry.hpp"

namespace feature_gen {

struct Sample {
  std::array<shapeid::Pixel, 4> corners{};
  std::int64_t area_px = 0;
};

inline shapeid::Pixel at(double x, double y) {
  return {static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y))};
}

inline double longest(const std::array<shapeid::Pixel, 4>& p) {
  double m = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) m = std::max(m, std::hypot(p[i].x - p[j].x, p[i].y - p[j].y));
  }
  return m;
}

// A pair offset by 1 or 2 px on an axis is aligned at scale 1 and not after
// scaling, which changes the hemisphere fit rather than the shape. Pairs
// closer than 20 px give a radius too small to pass the area test anyway.
inline bool has_fragile_alignment(const std::array<shapeid::Pixel, 4>& p) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const int dx = std::abs(p[i].x - p[j].x), dy = std::abs(p[i].y - p[j].y);
      if (std::hypot(dx, dy) < 20) continue;
      if ((dx > 0 && dx <= 2) || (dy > 0 && dy <= 2)) return true;
    }
  }
  return false;
}

/// A sample whose longest corner distance is at least 60 px, so the
/// degenerate threshold is relative at every scale >= 1.
inline Sample random_sample(std::mt19937& rng) {
  using std::numbers::pi;
  std::uniform_real_distribution<double> u(0, 1);
  const auto range = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
  std::uniform_int_distribution<int> kind(0, 6);

  for (;;) {
    Sample s;
    auto& p = s.corners;
    const double cx = range(-100, 100), cy = range(-100, 100);
    const double rot = range(0, 2 * pi);
    const auto place = [&](double x, double y) {
      return at(cx + x * std::cos(rot) + y * std::sin(rot), cy - x * std::sin(rot) + y * std::cos(rot));
    };
    double poly = 0;
    switch (kind(rng)) {
      case 0: {  // rectangle or square
        const double w = range(40, 160), h = u(rng) < 0.3 ? w : range(40, 160);
        p = {place(-w / 2, -h / 2), place(w / 2, -h / 2), place(w / 2, h / 2), place(-w / 2, h / 2)};
        poly = w * h;
        break;
      }
      case 1: {  // rhombus
        const double a = range(30, 90), b = range(20, a);
        p = {place(-a, 0), place(0, -b), place(a, 0), place(0, b)};
        poly = 2 * a * b;
        break;
      }
      case 2: {  // kite
        const double l = range(80, 180), w = range(30, 70), t = range(0.2, 0.45);
        p = {place(0, 0), place(l * t, -w), place(l, 0), place(l * t, w)};
        poly = l * w;
        break;
      }
      case 3: {  // half-disk corners, axis-aligned flat edge
        const double r = range(35, 110);
        p = {at(cx - r, cy), at(cx + r, cy), at(cx + r * std::cos(1.1), cy + r * std::sin(1.1)),
             at(cx - r * std::cos(1.3), cy + r * std::sin(1.3))};
        s.area_px = std::llround(pi * r * r / 2 * range(0.95, 1.05));
        break;
      }
      case 4: {  // triangle with a doubled vertex
        const double b = range(60, 180), h = range(50, 160);
        p = {place(-b / 2, h / 2), place(b / 2, h / 2), place(0, -h / 2), {}};
        p[3] = {p[1].x - 1, p[1].y};
        poly = b * h / 2;
        break;
      }
      case 5:  // arbitrary quad
        for (auto& q : p) q = at(cx + range(-120, 120), cy + range(-120, 120));
        poly = shapeid::describe(shapeid::order_corners(p), 1).poly_area;
        break;
      default: {  // isosceles trapezoid
        const double a = range(50, 160), b = range(20, a), h = range(40, 120);
        p = {place(-a / 2, h / 2), place(a / 2, h / 2), place(b / 2, -h / 2), place(-b / 2, -h / 2)};
        poly = (a + b) / 2 * h;
        break;
      }
    }
    if (s.area_px == 0) {
      const double bulge = u(rng) < 0.5 ? range(0.97, 1.05) : range(1.12, 1.6);
      s.area_px = std::llround(poly * bulge);
    }
    if (s.area_px <= 0 || longest(p) < 60 || has_fragile_alignment(p)) continue;
    return s;
  }
}

inline Sample scaled(const Sample& s, int k) {
  Sample out;
  for (int i = 0; i < 4; ++i) out.corners[i] = {s.corners[i].x * k, s.corners[i].y * k};
  out.area_px = s.area_px * k * k;
  return out;
}

inline shapeid::FeatureVector features(const Sample& s) {
  return shapeid::describe(shapeid::order_corners(s.corners), s.area_px);
}

}  // namespace feature_gen
