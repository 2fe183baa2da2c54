#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cobsec {

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partition weight does not match the complex dimension it is paired with.
class DegreeMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A degree bound was exceeded before any computation started.
class ResourceGuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cobsec
