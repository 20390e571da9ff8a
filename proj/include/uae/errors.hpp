#pragma once

#include <stdexcept>
#include <string>

namespace uae {

/// Raised when a physical quantity falls outside the domain where the model is
/// defined (non-positive temperature, pressure below the zero-point floor,
/// inverted trap, violated cycle closure).
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uae
