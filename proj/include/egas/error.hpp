//  Copyright 2026 The egas Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef EGAS_ERROR_HPP
#define EGAS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace egas {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a semantic requirement (non-lattice
/// order, non-monotone function, overlapping blocks, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a documented size bound (oracle enumeration, path
/// length, materialized powersets).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace egas

#endif  // EGAS_ERROR_HPP
