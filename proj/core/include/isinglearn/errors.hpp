#pragma once

#include <stdexcept>
#include <string>

namespace isinglearn {

/// Raised when an operation would exceed a hard resource limit, e.g. an
/// exact-inference request beyond the 2^p table cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a randomized construction exhausts its retry budget.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on file read/write failures. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isinglearn
