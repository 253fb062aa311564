#include "shapeid/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace shapeid {

namespace {

using std::numbers::pi;

bool eq(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(a, b); }

// pi*r*l + pi*r^2 for the triangle left after dropping one corner of the
// closest pair. The most horizontal side is the base.
std::optional<double> cone_surface(const FeatureVector& f) {
  int closest = 0;
  for (int i = 1; i < 6; ++i) {
    if (f.d[i] < f.d[closest]) closest = i;
  }
  const int drop = kCornerPairs[closest].second;
  std::vector<Pixel> tri;
  for (int i = 0; i < 4; ++i) {
    if (i != drop) tri.push_back(f.corners.points[i]);
  }
  int base = 0;
  for (int i = 1; i < 3; ++i) {
    const auto dy = [&](int k) { return std::abs(tri[k].y - tri[(k + 1) % 3].y); };
    if (dy(i) < dy(base)) base = i;
  }
  const auto len = [&](int k) {
    return std::hypot(tri[k].x - tri[(k + 1) % 3].x, tri[k].y - tri[(k + 1) % 3].y);
  };
  const double r = len(base) / 2;
  if (r <= 0) return std::nullopt;
  const double l = (len((base + 1) % 3) + len((base + 2) % 3)) / 2;
  return pi * r * l + pi * r * r;
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << v;
  return os.str();
}

}  // namespace

void Tolerances::validate() const {
  if (!(rel_eps > 0 && rel_eps < 0.5)) throw std::invalid_argument("rel_eps must be in (0, 0.5)");
  if (!(area_eps > 0 && area_eps < 0.5)) throw std::invalid_argument("area_eps must be in (0, 0.5)");
  if (degen_eps && !(*degen_eps > 0)) throw std::invalid_argument("degen_eps must be positive");
  if (!(align_eps > 0)) throw std::invalid_argument("align_eps must be positive");
}

double Tolerances::degen_for(const FeatureVector& f) const {
  if (degen_eps) return *degen_eps;
  return std::max(3.0, 0.05 * *std::max_element(f.d.begin(), f.d.end()));
}

bool Evidence::rule(const std::string& name) const {
  const auto it = std::find_if(rules.begin(), rules.end(),
                               [&](const RuleCheck& r) { return r.name == name; });
  return it != rules.end() && it->passed;
}

Verdict classify(const FeatureVector& f, const Tolerances& tol) {
  tol.validate();
  Verdict v;
  Evidence& e = v.evidence;
  for (int i = 0; i < 4; ++i) e.sides[i] = f.d[kSidePairs[i]];
  for (int i = 0; i < 2; ++i) e.diagonals[i] = f.d[kDiagonalPairs[i]];
  e.sd = f.sd;
  e.degen_eps = tol.degen_for(f);
  e.area_px = f.area_px;
  e.poly_area = f.poly_area;
  if (f.poly_area > 0) e.bulge_ratio = static_cast<double>(f.area_px) / f.poly_area;

  const double area_px = static_cast<double>(f.area_px);
  const auto check = [&](const char* name, bool passed) {
    e.rules.push_back({name, passed});
    return passed;
  };

  // Evaluate every rule up front so the evidence is complete whatever fires.
  const int sd_index =
      static_cast<int>(std::min_element(f.d.begin(), f.d.end()) - f.d.begin());
  bool lone_sd = true;
  for (int i = 0; i < 6; ++i) {
    if (i != sd_index && eq(f.d[i], f.sd, tol.rel_eps)) lone_sd = false;
  }
  const bool degenerate = check("degenerate", f.sd <= e.degen_eps && lone_sd);

  const bool bulged = check("bulge", e.bulge_ratio && *e.bulge_ratio > 1 + tol.area_eps);
  const bool flat = e.bulge_ratio && *e.bulge_ratio <= 1 + tol.area_eps;

  bool sides_equal = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) sides_equal = sides_equal && eq(e.sides[i], e.sides[j], tol.rel_eps);
  }
  check("equal_sides", sides_equal && flat);
  const bool diagonals_equal = check("equal_diagonals", eq(e.diagonals[0], e.diagonals[1], tol.rel_eps));

  e.hemisphere = fit_hemisphere(f.corners, tol.align_eps);
  bool hemisphere = false;
  if (e.hemisphere && bulged) {
    hemisphere = std::abs(area_px - pi * e.hemisphere->r * e.hemisphere->r / 2) <=
                 tol.area_eps * std::max(area_px, pi * e.hemisphere->r * e.hemisphere->r / 2);
  }
  check("hemisphere_area", hemisphere);

  auto sorted = e.sides;
  std::sort(sorted.begin(), sorted.end());
  const bool paired = check("paired_sides", eq(sorted[0], sorted[1], tol.rel_eps) &&
                                                eq(sorted[2], sorted[3], tol.rel_eps) &&
                                                !eq(sorted[1], sorted[2], tol.rel_eps));
  const double a = (sorted[0] + sorted[1]) / 2, b = (sorted[2] + sorted[3]) / 2;
  const bool rect_area =
      check("rectangle_area", std::abs(area_px - a * b) <= tol.area_eps * std::max(area_px, a * b));

  if (degenerate) {
    e.cone_surface = cone_surface(f);
    v.label = bulged ? ShapeClass::Cone : ShapeClass::Triangle;
    v.fired = "degenerate";
  } else if (sides_equal && flat) {
    v.label = diagonals_equal ? ShapeClass::Square : ShapeClass::Rhombus;
    v.fired = "equal_sides";
  } else if (hemisphere) {
    v.label = ShapeClass::Hemisphere;
    v.fired = "hemisphere_area";
  } else if (paired && diagonals_equal && rect_area && flat) {
    v.label = ShapeClass::Rectangle;
    v.fired = "paired_sides";
  } else if (paired && diagonals_equal && bulged) {
    v.label = ShapeClass::Cylinder;
    v.fired = "paired_sides";
  } else if (paired && !diagonals_equal && flat) {
    v.label = ShapeClass::Kite;
    v.fired = "paired_sides";
  }
  return v;
}

std::string explain(const Verdict& v) {
  const Evidence& e = v.evidence;
  std::ostringstream os;
  os << "label: " << to_string(v.label);
  if (!v.fired.empty()) os << " (rule " << v.fired << ")";
  os << "\n";
  os << "sides: " << fmt(e.sides[0]) << ", " << fmt(e.sides[1]) << ", " << fmt(e.sides[2]) << ", "
     << fmt(e.sides[3]) << " px\n";
  os << "diagonals: " << fmt(e.diagonals[0]) << ", " << fmt(e.diagonals[1]) << " px\n";
  os << "sd: " << fmt(e.sd) << " px (degenerate below " << fmt(e.degen_eps) << ")\n";
  os << "area_px: " << e.area_px << ", poly_area: " << fmt(e.poly_area) << ", bulge_ratio: "
     << (e.bulge_ratio ? fmt(*e.bulge_ratio, 4) : std::string("n/a (degenerate polygon)")) << "\n";

  switch (v.label) {
    case ShapeClass::Square:
      os << "sides equal, diagonals equal\n";
      break;
    case ShapeClass::Rhombus:
      os << "sides equal, diagonals differ\n";
      break;
    case ShapeClass::Hemisphere: {
      const double half_disk = pi * e.hemisphere->r * e.hemisphere->r / 2;
      os << "hemisphere: r = " << fmt(e.hemisphere->r) << " px, 1/2 pi r^2 = " << fmt(half_disk)
         << " vs area_px " << e.area_px << "\n";
      break;
    }
    case ShapeClass::Triangle:
    case ShapeClass::Cone:
      os << "smallest distance is degenerate and unmatched; "
         << (v.label == ShapeClass::Cone ? "silhouette exceeds the corner triangle\n"
                                         : "silhouette matches the corner triangle\n");
      if (e.cone_surface) os << "pi r l + pi r^2 = " << fmt(*e.cone_surface) << " (reference only)\n";
      break;
    case ShapeClass::Rectangle:
      os << "sides in two equal pairs, diagonals equal, area matches a*b\n";
      break;
    case ShapeClass::Cylinder:
      os << "sides in two equal pairs, diagonals equal, silhouette exceeds the corner rectangle\n";
      break;
    case ShapeClass::Kite:
      os << "sides in two equal pairs, diagonals differ\n";
      break;
    case ShapeClass::Unknown: {
      os << "no rule matched; failed:";
      for (const auto& r : e.rules) {
        if (!r.passed) os << " " << r.name;
      }
      os << "\n";
      break;
    }
  }
  if (e.hemisphere && v.label != ShapeClass::Hemisphere) {
    os << "hemisphere fit: r = " << fmt(e.hemisphere->r) << " px\n";
  }
  os << "rules:";
  for (const auto& r : e.rules) os << " " << r.name << "=" << (r.passed ? "pass" : "fail");
  os << "\n";
  return os.str();
}

}  // namespace shapeid
