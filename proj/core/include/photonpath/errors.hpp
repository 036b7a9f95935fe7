#pragma once

#include <stdexcept>
#include <string>

namespace photonpath {

// Raised when inputs are well-formed but violate a physical or numerical
// precondition (invalid splitter, gain medium, degenerate geometry, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace photonpath
