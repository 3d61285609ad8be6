// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cnp {

/// Base class for all errors raised by the toolkit. Messages are
/// module-qualified ("pick: empty problem") so front ends can surface them
/// without re-mapping.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (boundary points, bad ids,
/// non-finite values).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be positive semidefinite is not. Carries the
/// offending smallest eigenvalue for diagnostics.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double lambda_min)
      : Error(what), lambda_min_(lambda_min) {}

  double lambda_min() const noexcept { return lambda_min_; }

 private:
  double lambda_min_;
};

}  // namespace cnp
