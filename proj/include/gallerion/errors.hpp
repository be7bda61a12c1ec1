#pragma once

#include <stdexcept>
#include <string>

namespace gallerion {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownCartanType : Error {
  explicit UnknownCartanType(const std::string& what_type)
      : Error("unknown Cartan type: " + what_type) {}
};

struct NonSphericalLocalType : Error {
  NonSphericalLocalType() : Error("non-spherical local type") {}
};

struct NotDominant : Error {
  NotDominant() : Error("coweight is not dominant") {}
};

struct NotPositivelyFolded : Error {
  NotPositivelyFolded() : Error("gallery is not positively folded") {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg)
      : Error("instance too large for brute force: " + msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace gallerion
