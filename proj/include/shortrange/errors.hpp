#pragma once

#include <stdexcept>
#include <string>

namespace shortrange {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative method failed to converge or produced a non-finite result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent run configuration (CLI flags or config file).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shortrange
