#pragma once

#include <stdexcept>

namespace lsqmc {

/// Raised when a computation would exceed a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsqmc
