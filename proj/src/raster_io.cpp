#include "shapeid/raster_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "shapeid/error.hpp"

namespace shapeid {

Raster::Raster(int width, int height, std::uint8_t value)
    : Raster(width, height,
             std::vector<std::uint8_t>(
                 width > 0 && height > 0 ? static_cast<std::size_t>(width) * height : 0, value)) {}

Raster::Raster(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("raster dimensions must be at least 1x1");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("raster pixel count does not match width*height");
  }
}

namespace {

// Largest accepted width or height; keeps a hostile header from requesting
// an enormous allocation.
constexpr long kMaxDimension = 1L << 15;

class PgmReader {
 public:
  explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (!at_end()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal token preceded by optional whitespace/comments.
  long read_uint(const char* what) {
    skip_space_and_comments();
    if (at_end()) throw PgmError(std::string("unexpected end of data reading ") + what, pos_);
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (1L << 30)) throw PgmError(std::string(what) + " is too large", start);
      ++pos_;
    }
    if (pos_ == start || (!at_end() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#')) {
      throw PgmError(std::string("non-numeric token for ") + what, start);
    }
    return value;
  }

  std::uint8_t byte() { return bytes_[pos_++]; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Raster load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError("malformed magic number (expected P2 or P5)", 0);
  }
  const bool binary = bytes[1] == '5';
  PgmReader in(bytes);
  in.byte();
  in.byte();
  if (!in.at_end() && !std::isspace(bytes[2]) && bytes[2] != '#') {
    throw PgmError("malformed magic number (expected P2 or P5)", 0);
  }

  in.skip_space_and_comments();
  const std::size_t width_at = in.pos();
  const long width = in.read_uint("width");
  const long height = in.read_uint("height");
  if (width < 1 || height < 1 || width > kMaxDimension || height > kMaxDimension) {
    throw PgmError("image dimensions out of range", width_at);
  }
  in.skip_space_and_comments();
  const std::size_t maxval_at = in.pos();
  const long maxval = in.read_uint("maxval");
  if (maxval < 1 || maxval > 255) {
    throw PgmError("maxval " + std::to_string(maxval) + " outside [1,255]", maxval_at);
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels;

  if (binary) {
    // Exactly one whitespace byte separates maxval from the payload.
    if (in.at_end()) throw PgmError("missing pixel data", in.pos());
    in.byte();
    if (in.remaining() < count) {
      throw PgmError("expected " + std::to_string(count) + " pixels, found " +
                         std::to_string(in.remaining()),
                     in.pos() + in.remaining());
    }
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = in.pos();
      const auto v = in.byte();
      if (v > maxval) throw PgmError("pixel value exceeds maxval", at);
      pixels.push_back(v);
    }
  } else {
    pixels.reserve(std::min<std::size_t>(count, bytes.size()));
    for (std::size_t i = 0; i < count; ++i) {
      in.skip_space_and_comments();
      if (in.at_end()) {
        throw PgmError("expected " + std::to_string(count) + " pixels, found " + std::to_string(i),
                       in.pos());
      }
      const std::size_t at = in.pos();
      const long v = in.read_uint("pixel");
      if (v > maxval) throw PgmError("pixel value exceeds maxval", at);
      pixels.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return Raster(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const Raster& r, bool binary) {
  std::string header = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(r.width()) + " " +
                       std::to_string(r.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto px = r.pixels();
  if (binary) {
    out.insert(out.end(), px.begin(), px.end());
    return out;
  }
  std::string body;
  body.reserve(px.size() * 4);
  for (int y = 0; y < r.height(); ++y) {
    for (int x = 0; x < r.width(); ++x) {
      if (x > 0) body += ' ';
      body += std::to_string(r.at(x, y));
    }
    body += '\n';
  }
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

Raster read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_pgm(bytes);
}

void write_pgm_file(const std::filesystem::path& path, const Raster& r, bool binary) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  const auto bytes = write_pgm(r, binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace shapeid
