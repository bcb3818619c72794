#pragma once

#include <stdexcept>
#include <string>

namespace knotres {

// Domain error with a stable machine-readable kind, e.g. "BadArcMultiplicity".
// The CLI serializes the kind into {"error": "..."} objects.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& what) {
  throw Error(std::move(kind), what);
}

}  // namespace knotres
