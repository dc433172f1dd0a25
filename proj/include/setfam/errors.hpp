#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setfam {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two members of a family compare equal.
struct DuplicateSetError : Error {
  DuplicateSetError(std::size_t first, std::size_t second, std::string msg)
      : Error(std::move(msg)), first_index(first), second_index(second) {}
  std::size_t first_index;
  std::size_t second_index;
};

struct ElementOutOfRangeError : Error {
  ElementOutOfRangeError(std::size_t set, long element, std::string msg)
      : Error(std::move(msg)), set_index(set), element(element) {}
  std::size_t set_index;
  long element;
};

struct UniverseTooLargeError : Error {
  using Error::Error;
};

struct NotASubfamilyError : Error {
  using Error::Error;
};

struct LimitExceededError : Error {
  using Error::Error;
};

struct GeometricUndefinedError : Error {
  using Error::Error;
};

// A verification step that should be impossible to fail did fail.  Raised
// instead of silently returning a wrong result.
struct InternalVerificationError : Error {
  using Error::Error;
};

struct BijectionViolatedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, std::string msg) : Error(std::move(msg)), line(line) {}
  std::size_t line;
};

}  // namespace setfam
