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

#include "langgames/core/errors.h"

#include <sstream>

namespace langgames {
namespace {

std::string Join(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    if (i > 0) out << "; ";
    out << diagnostics[i].ToString();
  }
  return out.str();
}

}  // namespace

std::string Diagnostic::ToString() const {
  std::ostringstream out;
  if (line > 0) out << line << ":" << column << ": ";
  if (!pointer.empty()) out << pointer << ": ";
  out << message;
  return out.str();
}

ConfigError::ConfigError(std::vector<Diagnostic> diagnostics)
    : Error(Join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace langgames
