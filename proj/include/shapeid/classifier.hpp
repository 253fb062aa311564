#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shapeid/geometry.hpp"
#include "shapeid/shape_class.hpp"

namespace shapeid {

/// Permissible errors for the equality tests.
struct Tolerances {
  double rel_eps = 0.05;   ///< relative length tolerance
  double area_eps = 0.10;  ///< relative area tolerance
  /// Degenerate-corner threshold in px; unset means max(3, 0.05 * longest distance).
  std::optional<double> degen_eps;
  double align_eps = 2.0;  ///< px, forwarded to fit_hemisphere

  /// Throws std::invalid_argument unless every value is positive and the
  /// relative tolerances are below 0.5.
  void validate() const;

  double degen_for(const FeatureVector& f) const;
};

struct RuleCheck {
  std::string name;
  bool passed = false;
};

/// Measurements behind a verdict.
struct Evidence {
  std::array<double, 4> sides{};
  std::array<double, 2> diagonals{};
  double sd = 0.0;
  double degen_eps = 0.0;
  std::int64_t area_px = 0;
  double poly_area = 0.0;
  /// area_px / poly_area; unset when the corner polygon has no area.
  std::optional<double> bulge_ratio;
  std::optional<HemisphereFit> hemisphere;
  /// pi*r*l + pi*r^2 from the degenerate corner triangle (r = half base,
  /// l = apex to base corner), reported for comparison only.
  std::optional<double> cone_surface;
  std::vector<RuleCheck> rules;  ///< in evaluation order

  bool rule(const std::string& name) const;
};

struct Verdict {
  ShapeClass label = ShapeClass::Unknown;
  std::string fired;  ///< rule that decided the label, empty for Unknown
  Evidence evidence;
};

/// Rules, first match wins:
///  1. degenerate: sd <= degen_eps and no other distance equals sd
///     -> Cone if bulge > 1 + area_eps, else Triangle
///  2. equal_sides: four sides mutually equal, no bulge
///     -> Square if the diagonals are equal, else Rhombus
///  3. hemisphere_area: an aligned corner pair gives r, area_px == pi r^2 / 2,
///     and the silhouette bulges past the corner polygon
///  4. paired_sides: sides form two equal pairs {a, a, b, b}, a != b
///     -> equal diagonals: Rectangle if area_px == a*b with no bulge,
///        Cylinder if bulge > 1 + area_eps; unequal diagonals without bulge: Kite
///  5. otherwise Unknown
/// Sides and diagonals come from the corner order (consecutive pairs vs
/// opposite pairs).
Verdict classify(const FeatureVector& f, const Tolerances& tol = {});

/// Multi-line description of the evidence and the rule that fired.
std::string explain(const Verdict& v);

}  // namespace shapeid
