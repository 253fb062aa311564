#include "shapeid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "shapeid/error.hpp"

namespace shapeid {

namespace {

// A fourth corner opposite p3 must reach at least this fraction of p3's
// distance from the diameter line. Cone caps stay below 0.25 by
// construction; true quadrilateral corners sit near 1.
constexpr double kOppositeRatio = 0.5;

constexpr double kMergeRadius = 0.5;

std::int64_t cross(Pixel o, Pixel a, Pixel b) {
  return static_cast<std::int64_t>(a.x - o.x) * (b.y - o.y) -
         static_cast<std::int64_t>(a.y - o.y) * (b.x - o.x);
}

std::int64_t dist2(Pixel a, Pixel b) {
  const std::int64_t dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double dist(Pixel a, Pixel b) { return std::sqrt(static_cast<double>(dist2(a, b))); }

}  // namespace

std::vector<Pixel> convex_hull(std::span<const Pixel> points) {
  std::vector<Pixel> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  // Andrew's monotone chain.
  std::vector<Pixel> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

CornerSet order_corners(const std::array<Pixel, 4>& picks) {
  double cx = 0, cy = 0;
  for (const auto& p : picks) {
    cx += p.x;
    cy += p.y;
  }
  cx /= 4;
  cy /= 4;

  struct Key {
    double angle;
    double radius;
    int index;
  };
  std::array<Key, 4> keys{};
  for (int i = 0; i < 4; ++i) {
    const double dx = picks[i].x - cx, dy = picks[i].y - cy;
    keys[i] = {std::atan2(dy, dx), std::hypot(dx, dy), i};
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.index < b.index;
  });

  CornerSet out;
  for (int i = 0; i < 4; ++i) out.points[i] = picks[keys[i].index];
  return out;
}

CornerSet extract_corners(std::span<const Pixel> boundary) {
  if (boundary.size() < 3) throw Error("too few points");
  const auto hull = convex_hull(boundary);
  if (hull.size() < 3) throw Error("degenerate boundary");

  // Diameter pair. Hull points are distinct, so (min, max) orders each pair.
  Pixel p1 = hull[0], p2 = hull[1];
  std::int64_t best = -1;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const Pixel a = std::min(hull[i], hull[j]);
      const Pixel b = std::max(hull[i], hull[j]);
      const auto d = dist2(a, b);
      if (d > best || (d == best && std::pair(a, b) < std::pair(p1, p2))) {
        best = d;
        p1 = a;
        p2 = b;
      }
    }
  }

  // Extremes on each side of line p1p2, by exact cross product.
  Pixel pos{}, neg{};
  std::int64_t pos_off = 0, neg_off = 0;
  for (const auto& q : hull) {
    const auto c = cross(p1, p2, q);
    if (c > pos_off || (c == pos_off && c > 0 && q < pos)) {
      pos_off = c;
      pos = q;
    }
    if (-c > neg_off || (-c == neg_off && c < 0 && q < neg)) {
      neg_off = -c;
      neg = q;
    }
  }
  const bool pos_main = pos_off >= neg_off;
  const std::int64_t main_off = pos_main ? pos_off : neg_off;
  const std::int64_t other_off = pos_main ? neg_off : pos_off;
  const bool four = other_off > 0 &&
                    static_cast<double>(other_off) >= kOppositeRatio * static_cast<double>(main_off);

  const Pixel p3 = pos_main ? pos : neg;
  if (four) return order_corners({p1, p2, p3, pos_main ? neg : pos});

  // No fourth corner: take the boundary point on p3's side of p1p2 farthest
  // in total from the three picks.
  const int side = cross(p1, p2, p3) > 0 ? 1 : -1;
  Pixel p4{};
  double best_total = -1;
  bool found = false;
  for (const auto& q : boundary) {
    if (q == p1 || q == p2 || q == p3) continue;
    if (side * cross(p1, p2, q) < 0) continue;
    const double total = dist(q, p1) + dist(q, p2) + dist(q, p3);
    if (total > best_total || (total == best_total && q < p4)) {
      best_total = total;
      p4 = q;
      found = true;
    }
  }
  if (!found) {
    // Only the three picks exist: repeat the one farthest from the others.
    const std::array<Pixel, 3> picks{p1, p2, p3};
    double far = -1;
    for (int i = 0; i < 3; ++i) {
      const double total = dist(picks[i], picks[(i + 1) % 3]) + dist(picks[i], picks[(i + 2) % 3]);
      if (total > far) {
        far = total;
        p4 = picks[i];
      }
    }
  }
  return order_corners({p1, p2, p3, p4});
}

Distances pairwise_distances(const CornerSet& c) {
  Distances out;
  for (std::size_t i = 0; i < kCornerPairs.size(); ++i) {
    const auto [a, b] = kCornerPairs[i];
    out.d[i] = dist(c.points[a], c.points[b]);
  }
  out.sd = *std::min_element(out.d.begin(), out.d.end());
  return out;
}

double polygon_area(const CornerSet& c) {
  std::vector<Pixel> distinct;
  for (const auto& p : c.points) {
    const bool merged = std::any_of(distinct.begin(), distinct.end(),
                                    [&](const Pixel& q) { return dist(p, q) < kMergeRadius; });
    if (!merged) distinct.push_back(p);
  }
  if (distinct.size() < 3) throw Error("degenerate polygon");

  double twice = 0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const Pixel a = distinct[i];
    const Pixel b = distinct[(i + 1) % distinct.size()];
    twice += static_cast<double>(a.x) * b.y - static_cast<double>(b.x) * a.y;
  }
  return std::abs(twice) / 2;
}

std::optional<HemisphereFit> fit_hemisphere(const CornerSet& c, double align_eps) {
  std::optional<HemisphereFit> best;
  for (const Axis axis : {Axis::Horizontal, Axis::Vertical}) {
    for (const auto& [i, j] : kCornerPairs) {
      const Pixel a = c.points[i], b = c.points[j];
      const int off = axis == Axis::Horizontal ? std::abs(a.y - b.y) : std::abs(a.x - b.x);
      if (off > align_eps) continue;
      const double r = dist(a, b) / 2;
      if (!best || r > best->r) {
        best = HemisphereFit{{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0}, r, axis, {i, j}};
      }
    }
  }
  return best;
}

FeatureVector describe(const CornerSet& c, std::int64_t area_px) {
  const auto dd = pairwise_distances(c);
  FeatureVector f;
  f.d = dd.d;
  f.sd = dd.sd;
  f.area_px = area_px;
  f.corners = c;
  try {
    f.poly_area = polygon_area(c);
  } catch (const Error&) {
    f.poly_area = 0.0;
  }
  return f;
}

FeatureVector build_features(const BinaryMask& m) {
  const auto b = boundary(m);
  return describe(extract_corners(b), area(m));
}

}  // namespace shapeid
