#pragma once

#include <stdexcept>
#include <string>

namespace gsdiv {

// Invalid tuning parameters or a genuinely divergent integrand
// (negative power of zero with positive weight, log of zero).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Curvature matrix too ill-conditioned to invert; never regularized silently.
class SingularJ : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsdiv
