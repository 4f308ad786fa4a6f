#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

// Invalid input data: bad word syntax, out-of-range generator index,
// mixed strand counts, contract violations (non-pure input to comb, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource bound was hit (handle-reduction fuel,
// sliding-circuit vertex cap). Never silent truncation.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidkit
