#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termclone {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term text. `position` is the 0-based character offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A size guard refused an enumeration that would grow too large.
class guard_error : public error {
 public:
  using error::error;
};

/// Fixed-width arithmetic would have overflowed.
class overflow_error : public error {
 public:
  using error::error;
};

/// An operation was called outside its stated precondition.
class precondition_error : public error {
 public:
  using error::error;
};

}  // namespace termclone
