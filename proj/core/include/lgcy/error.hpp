#pragma once

#include <stdexcept>
#include <string>

namespace lgcy {

// Raised for violated preconditions on mathematical inputs (non-narrow input,
// out-of-window character, non-invertible unit, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a model or group cannot be represented (cap exceeded, splitting
// failure, unsupported space for the model).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lgcy
