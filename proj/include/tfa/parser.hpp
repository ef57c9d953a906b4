// Copyright 2026 The TFA Workbench Authors
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
#include <string_view>

#include "tfa/program.hpp"

namespace tfa {

/// Error raised by the frontend. Carries the source position when one is
/// known; `what()` is already formatted as `line:col: message`.
class FrontendError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Duplicate, UnknownIdentifier, Hierarchy };

  FrontendError(Kind kind, SourcePos pos, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

/// Parses `.tfl` text and checks name-level well-formedness: unique class,
/// field, method and variable names, and every statement referring only to
/// declared variables, existing classes, and field/method names declared by
/// some class. Hierarchy checks (missing parents, cycles) are left to
/// build_class_table.
Program parse_program(std::string_view text);

}  // namespace tfa
