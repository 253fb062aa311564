#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace shapeid {

enum class ShapeClass {
  Rectangle,
  Cylinder,
  Kite,
  Square,
  Rhombus,
  Hemisphere,
  Triangle,
  Cone,
  Unknown,
};

/// The eight recognizable classes, in benchmark table order.
inline constexpr std::array<ShapeClass, 8> kShapeClasses = {
    ShapeClass::Rectangle, ShapeClass::Cylinder,   ShapeClass::Kite,     ShapeClass::Square,
    ShapeClass::Rhombus,   ShapeClass::Hemisphere, ShapeClass::Triangle, ShapeClass::Cone,
};

/// "Rectangle", "Cylinder", ... "Unknown".
std::string_view to_string(ShapeClass c);

/// Lowercase file-name form: "rectangle", "cylinder", ...
std::string_view slug(ShapeClass c);

/// Case-insensitive lookup of one of the eight classes; Unknown is not accepted.
std::optional<ShapeClass> parse_shape_class(std::string_view name);

}  // namespace shapeid
