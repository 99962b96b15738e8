#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace demorgan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tables, malformed JSON, structures that fail validation.
class InputError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t size, std::size_t limit)
      : Error(what + ": size " + std::to_string(size) + " exceeds limit " +
              std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

// A mathematical invariant failed on input that passed validation.
// Always an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_size = 64;         // largest algebra carrier accepted
  std::size_t bell_cap = 10;         // largest carrier for partition enumeration
  std::size_t max_dual_points = 7;   // largest dual space for enumeration
};

}  // namespace demorgan
