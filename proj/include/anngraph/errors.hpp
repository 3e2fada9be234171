// Copyright 2026 The anngraph Authors. All Rights Reserved.
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

#ifndef ANNGRAPH_ERRORS_HPP_
#define ANNGRAPH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anngraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search (ideal enumeration, clique search) ran past its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A presentation does not describe a commutative ring with identity.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent ring presentation.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Invariant requested on a graph with no vertices.
class EmptyGraph : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed. Always a bug (or a
/// mathematical surprise worth reporting).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace anngraph

#endif  // ANNGRAPH_ERRORS_HPP_
