#include "shapeid/segment.hpp"

#include <array>
#include <stdexcept>

#include "shapeid/error.hpp"

namespace shapeid {

BinaryMask::BinaryMask(int width, int height)
    : BinaryMask(width, height,
                 std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0)) {}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> fg)
    : width_(width), height_(height), fg_(std::move(fg)) {
  if (width < 1 || height < 1 ||
      fg_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("mask dimensions do not match its data");
  }
}

int otsu_level(const Raster& r) {
  std::array<std::int64_t, 256> hist{};
  for (const auto v : r.pixels()) ++hist[v];

  int distinct = 0;
  for (const auto n : hist) distinct += n > 0;
  if (distinct < 2) throw Error("degenerate histogram");

  const double total = static_cast<double>(r.pixels().size());
  double sum_all = 0;
  for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

  // Level t puts [0, t) in the lower class. Accumulate the lower class as t grows.
  double w_lo = 0, sum_lo = 0;
  double best = -1;
  int best_t = 1;
  for (int t = 1; t < 256; ++t) {
    w_lo += hist[t - 1];
    sum_lo += static_cast<double>(t - 1) * hist[t - 1];
    const double w_hi = total - w_lo;
    if (w_lo == 0 || w_hi == 0) continue;
    const double mu_lo = sum_lo / w_lo;
    const double mu_hi = (sum_all - sum_lo) / w_hi;
    const double between = w_lo * w_hi * (mu_lo - mu_hi) * (mu_lo - mu_hi);
    if (between > best) {
      best = between;
      best_t = t;
    }
  }
  return best_t;
}

BinaryMask binarize(const Raster& r, ThresholdMethod method) {
  int level = 0;
  if (const auto* f = std::get_if<FixedThreshold>(&method)) {
    if (f->level < 0 || f->level > 255) {
      throw Error("fixed threshold " + std::to_string(f->level) + " outside [0,255]");
    }
    level = f->level;
  } else {
    level = otsu_level(r);
  }
  std::vector<std::uint8_t> fg(r.pixels().size());
  const auto px = r.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) fg[i] = px[i] >= level ? 1 : 0;
  return BinaryMask(r.width(), r.height(), std::move(fg));
}

BinaryMask isolate_object(const BinaryMask& m) {
  const int w = m.width(), h = m.height();
  std::vector<int> label(m.data().size(), 0);
  std::vector<int> stack;
  int best_label = 0;
  std::size_t best_size = 0;
  int next = 0;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int seed = y * w + x;
      if (!m.at(x, y) || label[seed] != 0) continue;
      const int id = ++next;
      std::size_t size = 0;
      label[seed] = id;
      stack.push_back(seed);
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        ++size;
        const int px = i % w, py = i / w;
        const std::array<std::array<int, 2>, 4> nbrs{{{px - 1, py}, {px + 1, py}, {px, py - 1}, {px, py + 1}}};
        for (const auto& [nx, ny] : nbrs) {
          if (!m.fg_or_bg(nx, ny)) continue;
          const int j = ny * w + nx;
          if (label[j] != 0) continue;
          label[j] = id;
          stack.push_back(j);
        }
      }
      if (size > best_size) {
        best_size = size;
        best_label = id;
      }
    }
  }
  if (best_label == 0) throw Error("no object");

  std::vector<std::uint8_t> out(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) out[i] = label[i] == best_label ? 1 : 0;
  return BinaryMask(w, h, std::move(out));
}

std::vector<Pixel> boundary(const BinaryMask& m) {
  std::vector<Pixel> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.at(x, y)) continue;
      if (!m.fg_or_bg(x - 1, y) || !m.fg_or_bg(x + 1, y) || !m.fg_or_bg(x, y - 1) ||
          !m.fg_or_bg(x, y + 1)) {
        out.push_back({x, y});
      }
    }
  }
  if (out.empty()) throw Error("no object");
  return out;
}

std::int64_t area(const BinaryMask& m) {
  std::int64_t n = 0;
  for (const auto v : m.data()) n += v;
  return n;
}

}  // namespace shapeid
