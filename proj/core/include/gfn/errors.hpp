#pragma once

#include <stdexcept>
#include <string>

namespace gfn {

/// Input outside the mathematical domain of the requested operation
/// (e.g. Re z < 0, where the defining integral diverges).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// The integration engine exhausted its subdivision budget before
/// reaching the requested error target.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or data file; the message carries the line number.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfn
