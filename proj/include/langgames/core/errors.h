// Copyright 2026 The Langgames Authors.
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

#ifndef LANGGAMES_CORE_ERRORS_H_
#define LANGGAMES_CORE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace langgames {

// Base class for every error raised by the library. Callers that only need
// to distinguish "our" failures from std exceptions can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something malformed or out of contract.
class InputError : public Error {
 public:
  using Error::Error;
};

// The operation needs a capability the object does not have (e.g. a task
// without an oracle asked to verify a dataset).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A spec or environment failed its construction-time invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A library invariant was broken at runtime (e.g. an evaluator returned a
// verdict outside its declared codomain).
class InternalError : public Error {
 public:
  using Error::Error;
};

// One located problem in a configuration document. line/column are 1-based;
// 0 means the position is unknown.
struct Diagnostic {
  std::string pointer;
  std::string message;
  int line = 0;
  int column = 0;

  std::string ToString() const;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<Diagnostic> diagnostics);
  explicit ConfigError(const std::string& message)
      : ConfigError(std::vector<Diagnostic>{{"", message, 0, 0}}) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace langgames

#endif  // LANGGAMES_CORE_ERRORS_H_
