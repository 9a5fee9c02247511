#pragma once

#include <stdexcept>
#include <string>

namespace groverlab {

/// Thrown when a request exceeds a hard resource guard (state size, step count).
class ResourceLimitError : public std::runtime_error {
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groverlab
