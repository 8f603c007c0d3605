#pragma once

#include <stdexcept>
#include <string>

namespace fermigas {

/// Raised when a numerical procedure fails to converge or to bracket a root.
/// Input-domain violations use std::domain_error instead.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fermigas
