#pragma once

#include <stdexcept>
#include <string>

namespace failcast {

// Malformed or inconsistent configuration input. CLI exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Event data violating the model's structural assumptions. CLI exit code 3.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Sampler or optimizer failure. CLI exit code 4.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace failcast
