// Copyright 2026 The vrvi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VRVI_ERRORS_H_
#define VRVI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vrvi {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented precondition (dimension mismatch,
// point outside the domain, malformed file).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Incompatible or inadmissible solver/problem configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A computation produced non-finite values.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vrvi

#endif  // VRVI_ERRORS_H_
