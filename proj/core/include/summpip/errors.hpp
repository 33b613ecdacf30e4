#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace summpip {

/// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A data file violates its line format. `line()` is 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The eigensolver failed to reach the requested residual.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace summpip
