#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shapeid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PGM input. `offset()` is the byte position where parsing stopped.
class PgmError : public Error {
 public:
  PgmError(const std::string& what, std::size_t offset)
      : Error("PGM parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace shapeid
