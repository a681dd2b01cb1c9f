#pragma once

#include <stdexcept>
#include <string>

namespace aoi {

/// An iterative solver exhausted its iteration budget without meeting its
/// tolerance. Callers that cannot proceed with a partial result throw this.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure (missing file, unwritable directory, ...).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aoi
