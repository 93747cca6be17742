#pragma once

#include <stdexcept>
#include <string>

namespace mdir {

// Malformed inputs: bad files, arity mismatches, unsupported box requests.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Base for violations of a mathematical precondition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// f(1,...,1) = 0: the function is not invertible under the Dirichlet product.
class NotAUnitError : public DomainError {
 public:
  explicit NotAUnitError(const std::string& msg) : DomainError(msg) {}
};

// Zeta enclosure requested too close to the pole at 1.
class PoleGuardError : public DomainError {
 public:
  explicit PoleGuardError(const std::string& msg) : DomainError(msg) {}
};

// Evaluation point outside the certified convergence region.
class OutOfRegionError : public DomainError {
 public:
  explicit OutOfRegionError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace mdir
