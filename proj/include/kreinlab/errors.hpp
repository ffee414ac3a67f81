// Copyright (c) the kreinlab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace kreinlab {

// Bad arguments or configuration. Maps to exit/status code 2.
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite values, functional-calculus domain violations, eigensolver
// failures. Maps to exit/status code 3.
class NumericDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolvent requested within 1e-12 of a spectral point.
class SingularResolventError : public NumericDomainError {
 public:
  using NumericDomainError::NumericDomainError;
};

}  // namespace kreinlab
