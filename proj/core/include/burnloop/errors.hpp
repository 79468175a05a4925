#pragma once

#include <stdexcept>
#include <string>

namespace burnloop {

/// A configured resource bound (group order, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, unknown group reference, invalid table.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed to verify after a construction. These are
/// never silently swallowed; a throw means the computed object is unusable.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace burnloop
