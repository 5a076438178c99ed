#ifndef DIMDIST_ERROR_HPP
#define DIMDIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dimdist {

struct SpaceMismatch : std::invalid_argument {
  explicit SpaceMismatch(const std::string& what)
      : std::invalid_argument("space mismatch: " + what) {}
};

struct EmptyInput : std::invalid_argument {
  explicit EmptyInput(const std::string& what)
      : std::invalid_argument("empty input: " + what) {}
};

struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dimdist

#endif
