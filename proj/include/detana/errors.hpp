#pragma once

#include <stdexcept>
#include <string>

namespace detana {

// Error categories; the CLI maps them to exit codes (config=2, numerics=3, io=4).

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace detana
