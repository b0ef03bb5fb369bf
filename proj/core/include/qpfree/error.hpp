// Copyright 2026 The qpfree Authors.
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

#ifndef QPFREE_ERROR_HPP
#define QPFREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpfree {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (words, rationals, files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Shapes that do not fit together: matrix sizes, word/scheme lengths,
/// mismatched base sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (chain conditions, balance, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input that fails a structural validation (non-T0 topology, open-set
/// family that is not a topology, non-reflexive entourage file).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured search cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpfree

#endif  // QPFREE_ERROR_HPP
