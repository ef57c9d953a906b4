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

// Seeded random programs for differential and property testing.
//
// Output is well-typed: every assignment moves a value into a variable whose
// declared class is a superclass of the value's, every field and method
// accessed exists on the receiver's declared class, and all overrides of a
// method name share one signature.

#pragma once

#include <cstdint>
#include <string_view>

#include "tfa/program.hpp"

namespace tfa {

struct GenConfig {
  std::uint64_t seed = 1;
  int min_classes = 2;
  int max_classes = 10;
  int max_depth = 4;  // classes on the longest extends chain
  int min_fields = 0;
  int max_fields = 2;
  int min_methods = 0;  // newly introduced names per class
  int max_methods = 2;
  int min_locals = 1;
  int max_locals = 4;
  int main_min_statements = 10;
  int main_max_statements = 40;
  int method_min_statements = 1;
  int method_max_statements = 6;
  int max_total_statements = 200;
  double override_probability = 0.4;
  double weight_new = 3;
  double weight_copy = 3;
  double weight_load = 2;
  double weight_store = 2;
  double weight_call = 3;
  double weight_null = 0.2;

  /// Throws std::invalid_argument for empty ranges or unusable weights.
  void validate() const;
};

/// Parses `key = value` lines; `#` starts a comment. Keys not given keep
/// their defaults. Throws std::invalid_argument on unknown keys, malformed
/// lines or an invalid result.
GenConfig parse_gen_config(std::string_view text);

/// Deterministic in the whole config.
Program gen_program(const GenConfig& cfg);

}  // namespace tfa
