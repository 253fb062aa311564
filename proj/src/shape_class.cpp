#include "shapeid/shape_class.hpp"

#include <algorithm>
#include <cctype>

namespace shapeid {

std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::Rectangle: return "Rectangle";
    case ShapeClass::Cylinder: return "Cylinder";
    case ShapeClass::Kite: return "Kite";
    case ShapeClass::Square: return "Square";
    case ShapeClass::Rhombus: return "Rhombus";
    case ShapeClass::Hemisphere: return "Hemisphere";
    case ShapeClass::Triangle: return "Triangle";
    case ShapeClass::Cone: return "Cone";
    case ShapeClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view slug(ShapeClass c) {
  switch (c) {
    case ShapeClass::Rectangle: return "rectangle";
    case ShapeClass::Cylinder: return "cylinder";
    case ShapeClass::Kite: return "kite";
    case ShapeClass::Square: return "square";
    case ShapeClass::Rhombus: return "rhombus";
    case ShapeClass::Hemisphere: return "hemisphere";
    case ShapeClass::Triangle: return "triangle";
    case ShapeClass::Cone: return "cone";
    case ShapeClass::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<ShapeClass> parse_shape_class(std::string_view name) {
  for (const auto c : kShapeClasses) {
    const auto s = slug(c);
    if (s.size() == name.size() &&
        std::equal(s.begin(), s.end(), name.begin(), [](char a, char b) {
          return a == std::tolower(static_cast<unsigned char>(b));
        })) {
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace shapeid
