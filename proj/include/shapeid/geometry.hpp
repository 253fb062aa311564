#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shapeid/point.hpp"
#include "shapeid/segment.hpp"

namespace shapeid {

/// Four corner pixels ordered by increasing angle about their centroid
/// (counterclockwise in the y-down pixel frame; ties by distance from the
/// centroid, then by pick order). Degenerate shapes repeat or nearly repeat
/// a corner.
struct CornerSet {
  std::array<Pixel, 4> points{};
};

/// Index pairs for the six corner distances, in the order used by
/// FeatureVector::d. With ordered corners, pairs {0,3,5,2} are the sides
/// (0-1, 1-2, 2-3, 3-0) and pairs {1,4} are the diagonals (0-2, 1-3).
inline constexpr std::array<std::pair<int, int>, 6> kCornerPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<int, 4> kSidePairs = {0, 3, 5, 2};
inline constexpr std::array<int, 2> kDiagonalPairs = {1, 4};

struct Distances {
  std::array<double, 6> d{};
  double sd = 0.0;  ///< smallest of d
};

struct FeatureVector {
  std::array<double, 6> d{};  ///< pairwise corner distances, kCornerPairs order
  double sd = 0.0;
  std::int64_t area_px = 0;  ///< foreground pixel count
  double poly_area = 0.0;    ///< shoelace area of the distinct corners
  CornerSet corners;
};

enum class Axis { Horizontal, Vertical };

struct HemisphereFit {
  Point2d center;
  double r = 0.0;
  Axis aligned_axis = Axis::Horizontal;
  std::pair<int, int> pair{0, 0};  ///< corner indices of the aligned pair
};

/// Convex hull vertices (collinear points dropped), counterclockwise in the
/// y-down frame, starting from the lexicographically smallest point.
std::vector<Pixel> convex_hull(std::span<const Pixel> points);

/// Four corners from a boundary point set:
///  1. p1, p2: a hull diameter pair (ties by lexicographic pair order);
///  2. p3: the hull point farthest from line p1p2, on whichever side reaches
///     farther;
///  3. p4: the farthest hull point on the opposite side, provided it is at
///     least half as far from the line as p3. Otherwise the shape has no
///     fourth corner there (an empty side, or a shallow curved cap below a
///     triangle) and p4 is the boundary point on p3's side of the line
///     maximizing the summed distance to p1, p2, p3. For a triangle this
///     lands next to a vertex; along a circular arc it stays on the arc.
/// Throws Error("too few points") for fewer than 3 points and
/// Error("degenerate boundary") when all points are collinear.
CornerSet extract_corners(std::span<const Pixel> boundary);

/// Orders four picks as CornerSet requires.
CornerSet order_corners(const std::array<Pixel, 4>& picks);

Distances pairwise_distances(const CornerSet& c);

/// Shoelace area after merging corners closer than 0.5 px. Throws
/// Error("degenerate polygon") if fewer than three distinct corners remain.
double polygon_area(const CornerSet& c);

/// Corner pair aligned within `align_eps` px on y (horizontal) or x
/// (vertical) with the largest separation; center is its midpoint and r half
/// its length. Horizontal wins ties, then lower pair index.
std::optional<HemisphereFit> fit_hemisphere(const CornerSet& c, double align_eps = 2.0);

/// Packages distances, polygon area and the given pixel area for `c`.
FeatureVector describe(const CornerSet& c, std::int64_t area_px);

/// boundary -> extract_corners -> describe, for a single-object mask.
FeatureVector build_features(const BinaryMask& m);

}  // namespace shapeid
