// Copyright 2026 The ipoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipoly {

/// Base of every precondition failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class InversionOfZero : public Error {
 public:
  InversionOfZero() : Error("inversion of zero") {}
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class TargetTooShort : public Error {
 public:
  using Error::Error;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class SingularDiagonal : public Error {
 public:
  SingularDiagonal() : Error("triangular matrix has a zero diagonal") {}
};

/// Raised when the divisor (or an operand that must be inverted) has a zero
/// leading coefficient.
class NonInvertibleLeading : public Error {
 public:
  using Error::Error;
};

class DegreeConstraint : public Error {
 public:
  using Error::Error;
};

class RestorationViolation : public Error {
 public:
  RestorationViolation(std::size_t region, std::size_t index)
      : Error("region " + std::to_string(region) + " differs at index " +
              std::to_string(index)),
        region_(region),
        index_(index) {}

  std::size_t region() const { return region_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t region_;
  std::size_t index_;
};

class GuardViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ipoly
