#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "shapeid/error.hpp"
#include "shapeid/segment.hpp"
#include "shapeid/synth.hpp"

using namespace shapeid;

namespace {

BinaryMask filled(int w, int h, int x0, int y0, int bw, int bh) {
  BinaryMask m(w, h);
  for (int y = y0; y < y0 + bh; ++y) {
    for (int x = x0; x < x0 + bw; ++x) m.set(x, y, true);
  }
  return m;
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("binarize with a fixed level") {
  const Raster r(2, 2, {0, 255, 255, 0});
  const auto m = binarize(r, FixedThreshold{128});
  CHECK(m.data() == std::vector<std::uint8_t>{0, 1, 1, 0});
  CHECK(error_of([&] { binarize(r, FixedThreshold{256}); }).find("outside") != std::string::npos);
  CHECK(error_of([&] { binarize(r, FixedThreshold{-1}); }).find("outside") != std::string::npos);
}

TEST_CASE("fixed thresholding is monotone in the level") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(0, 255);
  std::vector<std::uint8_t> px(32 * 32);
  for (auto& p : px) p = static_cast<std::uint8_t>(v(rng));
  const Raster r(32, 32, px);
  auto prev = area(binarize(r, FixedThreshold{0}));
  CHECK(prev == 32 * 32);
  for (int t = 1; t <= 255; ++t) {
    const auto m = binarize(r, FixedThreshold{t});
    const auto lower = binarize(r, FixedThreshold{t - 1});
    for (std::size_t i = 0; i < m.data().size(); ++i) {
      if (m.data()[i]) REQUIRE(lower.data()[i]);
    }
    CHECK(area(m) <= prev);
    prev = area(m);
  }
}

TEST_CASE("otsu recovers the generator's mask on every corpus render") {
  for (auto e : corpus()) {
    CAPTURE(e.name);
    for (const auto [fg, bg] : {std::pair{255, 0}, {180, 40}, {90, 20}}) {
      e.spec.fg = static_cast<std::uint8_t>(fg);
      e.spec.bg = static_cast<std::uint8_t>(bg);
      const Raster r = render(e.spec, 256, 256);
      const auto m = binarize(r);
      bool same = true;
      for (int y = 0; y < 256; ++y) {
        for (int x = 0; x < 256; ++x) same = same && (m.at(x, y) == (r.at(x, y) == fg));
      }
      CHECK(same);
    }
  }
}

TEST_CASE("otsu picks the lowest level among equal splits") {
  CHECK(otsu_level(Raster(2, 1, {0, 255})) == 1);
  CHECK(otsu_level(Raster(4, 1, {10, 10, 200, 200})) == 11);
}

TEST_CASE("otsu on a single intensity is a degenerate histogram") {
  CHECK(error_of([] { binarize(Raster(4, 4, std::uint8_t{7})); }) == "degenerate histogram");
}

TEST_CASE("isolate_object keeps a lone component unchanged") {
  const auto m = filled(20, 20, 3, 4, 10, 6);
  CHECK(isolate_object(m) == m);
}

TEST_CASE("isolate_object strips single-pixel speckle around a square") {
  auto m = filled(160, 160, 30, 30, 100, 100);
  const auto clean = m;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pos(0, 159);
  int placed = 0;
  while (placed < 30) {
    const int x = pos(rng), y = pos(rng);
    // Speckle away from the square and from other speckle.
    if (x >= 28 && x <= 131 && y >= 28 && y <= 131) continue;
    bool lonely = true;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) lonely = lonely && !m.fg_or_bg(x + dx, y + dy);
    }
    if (!lonely) continue;
    m.set(x, y, true);
    ++placed;
  }
  const auto iso = isolate_object(m);
  CHECK(iso == clean);
  CHECK(iso.data() == oracle::largest_component(m.data(), 160, 160));
  CHECK(area(iso) < area(m));
}

TEST_CASE("isolate_object breaks size ties toward the earliest component") {
  auto m = filled(10, 10, 6, 0, 2, 2);  // starts at row 0
  m.set(0, 5, true);
  m.set(1, 5, true);
  m.set(0, 6, true);
  m.set(1, 6, true);
  const auto iso = isolate_object(m);
  CHECK(iso.at(6, 0));
  CHECK_FALSE(iso.at(0, 5));
}

TEST_CASE("isolate_object uses 4-connectivity") {
  BinaryMask m(4, 4);
  m.set(0, 0, true);
  m.set(1, 1, true);  // diagonal only
  m.set(2, 1, true);
  const auto iso = isolate_object(m);
  CHECK_FALSE(iso.at(0, 0));
  CHECK(area(iso) == 2);
}

TEST_CASE("isolate_object agrees with a flood-fill oracle on random masks") {
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMask m(24, 17);
    for (int y = 0; y < 17; ++y) {
      for (int x = 0; x < 24; ++x) m.set(x, y, coin(rng));
    }
    if (area(m) == 0) continue;
    const auto iso = isolate_object(m);
    CHECK(iso.data() == oracle::largest_component(m.data(), 24, 17));
    CHECK(area(iso) <= area(m));
  }
}

TEST_CASE("isolate_object and boundary reject an empty mask") {
  CHECK(error_of([] { isolate_object(BinaryMask(5, 5)); }) == "no object");
  CHECK(error_of([] { boundary(BinaryMask(5, 5)); }) == "no object");
}

TEST_CASE("boundary of small masks") {
  const auto b = boundary(filled(3, 3, 0, 0, 3, 3));
  CHECK(b.size() == 8);
  CHECK(std::find(b.begin(), b.end(), Pixel{1, 1}) == b.end());

  const auto one = boundary(filled(1, 1, 0, 0, 1, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Pixel{0, 0});
}

TEST_CASE("boundary of a filled square matches the perimeter count") {
  for (const int n : {1, 2, 5, 100}) {
    const auto b = boundary(filled(120, 120, 10, 10, n, n));
    CHECK(static_cast<std::int64_t>(b.size()) == oracle::square_perimeter_pixels(n));
  }
}

TEST_CASE("boundary points are distinct foreground pixels in row-major order") {
  for (const auto& e : corpus()) {
    const auto m = binarize(render(e.spec, 256, 256));
    const auto b = boundary(m);
    std::set<Pixel> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(m.at(b[i].x, b[i].y));
      CHECK(seen.insert(b[i]).second);
      if (i > 0) {
        CHECK((b[i - 1].y < b[i].y || (b[i - 1].y == b[i].y && b[i - 1].x < b[i].x)));
      }
    }
  }
}

TEST_CASE("removing the boundary leaves a connected interior for convex shapes") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto m = binarize(render(e.spec, 256, 256));
    for (const auto& p : boundary(m)) m.set(p.x, p.y, false);
    REQUIRE(area(m) > 0);
    CHECK(isolate_object(m) == m);
  }
}

TEST_CASE("area counts foreground pixels") {
  CHECK(area(filled(30, 30, 5, 5, 10, 10)) == 100);
  CHECK(area(BinaryMask(8, 8)) == 0);

  const auto hemi = binarize(render(ShapeSpec::hemisphere({128, 100}, 50), 256, 256));
  const double expected = std::numbers::pi * 2500 / 2;
  CHECK(std::abs(area(hemi) - expected) / expected < 0.02);
}
