// Copyright 2026 The qfw Authors
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

#ifndef QFW_ERROR_HPP
#define QFW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qfw {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

class InvalidEmbeddingError : public Error {
 public:
  using Error::Error;
};

class ClaimViolationError : public Error {
 public:
  using Error::Error;
};

class NotEmbeddingError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class NotAGroupError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ZeroElementError : public Error {
 public:
  using Error::Error;
};

class BadCharacteristicError : public Error {
 public:
  using Error::Error;
};

class NotATreeError : public Error {
 public:
  using Error::Error;
};

class NotAnEmbeddingError : public Error {
 public:
  using Error::Error;
};

class TowerMismatchError : public Error {
 public:
  using Error::Error;
};

class NotPHighError : public Error {
 public:
  using Error::Error;
};

class NotAVariableError : public Error {
 public:
  using Error::Error;
};

class EdgeNotPreservedError : public Error {
 public:
  using Error::Error;
};

class NotCTSquareError : public Error {
 public:
  using Error::Error;
};

/// Text-format parse failure. Carries 1-based line and column of the offending
/// token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qfw

#endif  // QFW_ERROR_HPP
