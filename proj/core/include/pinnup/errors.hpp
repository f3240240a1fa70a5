/*
 * Copyright 2026 The PINNup Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pinnup {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad widths, split factor 0, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation point too close to the point source.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Mismatched array or layer shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Non-finite loss, NaN parameters and similar numerical breakdowns.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Linear solver breakdown (tiny pivot).
class SolverError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Requested problem would exceed the configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// File exists but its content is not a valid payload of the expected kind.
class CorruptFileError : public IoError {
 public:
  using IoError::IoError;
};

// Payload parsed but its values violate an invariant (e.g. velocity <= 0).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pinnup
