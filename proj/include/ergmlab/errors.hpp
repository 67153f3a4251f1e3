#pragma once

#include <stdexcept>
#include <string>

namespace ergm {

/// Input outside the size envelope an operation supports (e.g. exact
/// enumeration beyond 6 vertices, automorphism search beyond 8).
class UnsupportedSizeError : public std::invalid_argument {
 public:
  explicit UnsupportedSizeError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Parameters outside the validity region of a closed-form expression
/// (e.g. a correction denominator that is not positive).
class DegenerateParametersError : public std::domain_error {
 public:
  explicit DegenerateParametersError(const std::string& what)
      : std::domain_error(what) {}
};

/// Malformed configuration input (bad schema, missing keys, bad values).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ergm
