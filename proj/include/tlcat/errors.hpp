#pragma once

#include <stdexcept>
#include <string>

namespace tlcat {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// malformed input: bad letters, non-perfect matching, crossing strings, bad JSON
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// precondition violations on otherwise well-formed values
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// compose() called with D.lower != E.upper
struct WordMismatch : InvalidArgument {
  explicit WordMismatch(const std::string& what) : InvalidArgument(what) {}
};

// query beyond the materialized cap of a generated spec, or beyond a guard
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// a guaranteed internal invariant failed to hold
struct Internal : Error {
  explicit Internal(const std::string& what) : Error(what) {}
};

}  // namespace tlcat
