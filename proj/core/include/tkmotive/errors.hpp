// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_ERRORS_HPP
#define TKMOTIVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tkmotive {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational factor did not divide the polynomial it scales.
class NonIntegralScale : public Error {
 public:
  using Error::Error;
};

/// (m, n) is not a pair of coprime positive integers.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// The closed form is not defined for these parameters (m = 1 or n = 1).
class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

/// Two independently assembled expressions disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class NoAdmissiblePrime : public Error {
 public:
  using Error::Error;
};

/// The enumeration would exceed the configured memory budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A matrix pair fell outside every stratum. Always fatal.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tkmotive

#endif  // TKMOTIVE_ERRORS_HPP
