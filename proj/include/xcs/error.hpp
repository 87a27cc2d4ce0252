/* Copyright 2026 The xcs Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xcs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownStateError : public Error {
 public:
  explicit UnknownStateError(int id)
      : Error("unknown state id " + std::to_string(id)), id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

/// Input that is well-formed but describes a configuration the requested
/// route does not support (e.g. t2 != 0 for the frequency-domain cross peak).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure during evaluation (non-finite samples and the like).
class ComputationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace xcs
