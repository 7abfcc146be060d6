#pragma once

#include <stdexcept>

namespace ksinv {

// Contract violation on caller-supplied input (bad parameters, bad flags).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A self-check inside the library failed. Never expected on a correct build.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ksinv
