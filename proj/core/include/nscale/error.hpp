#pragma once

#include <stdexcept>
#include <string>

namespace nscale {

// Argument outside an operation's mathematical domain (r <= 0, NaN input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a precondition: mismatched structures, bad shapes, wrong dimension.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an operation that assumes path-independent scale factors
// is handed a gauge field whose loop factors differ from 1.
class IntegrabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nscale
