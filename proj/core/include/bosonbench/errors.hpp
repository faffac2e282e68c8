// Copyright 2026 The bosonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONBENCH_ERRORS_HPP
#define BOSONBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bb {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix shape mismatch (non-square input, incompatible dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside its mathematical domain (x outside [0,1], invalid
/// permutation, inconsistent photon number, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a computational guard (factorial or binomial blow-up).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Index outside the valid mode range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries a human-readable location in the message.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (mixture weights outside [0,1], non-nested ladder).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (missing file, unwritable output).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bb

#endif  // BOSONBENCH_ERRORS_HPP
