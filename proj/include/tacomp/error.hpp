// Copyright 2026 The tacomp Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace tacomp {

enum class ErrorKind {
  InvalidPosition,
  NonLinearPattern,
  UnknownSymbol,
  ArityMismatch,
  DuplicateSymbol,
  UnboundVariable,
  VariableLhs,
  NotLeftLinear,
  ColoredInput,
  UncoloredEpsilon,
  SignatureMismatch,
  NotPairAutomaton,
  UnknownState,
  DuplicateState,
  Syntax,
  UndeclaredName,
  StateLimit,
};

const char* to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` is stable for
// callers that need to branch on the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& msg, std::size_t line,
             std::size_t column)
      : Error(kind, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tacomp
