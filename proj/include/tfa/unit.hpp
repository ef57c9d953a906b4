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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfa/class_table.hpp"
#include "tfa/program.hpp"
#include "tfa/vars.hpp"

namespace tfa {

// Statements with every name resolved. Null assignments and no-op expression
// statements are dropped; a discarded call targets its temporary.
namespace ir {

struct Alloc {
  VarIndex target;
  ClassId cls;
  SiteId site;
};

struct Copy {
  VarIndex target;
  VarIndex source;
};

struct Load {
  VarIndex target;
  VarIndex base;
  FieldId field;
};

struct Store {
  VarIndex base;
  FieldId field;
  VarIndex source;
};

struct Call {
  VarIndex target;
  VarIndex receiver;
  VarIndex arg;
  NameId method;
  SiteId site;
};

}  // namespace ir

struct MethodVars {
  VarIndex this_var;
  VarIndex param;
  VarIndex return_var;
  VarIndex return_slot;
};

/// A validated program together with everything the analyses share: the
/// class table, the canonical variables and the resolved statement lists.
class Unit {
 public:
  const Program& program() const { return program_; }
  const ClassTable& classes() const { return classes_; }
  const VarTable& vars() const { return vars_; }

  const std::vector<ir::Alloc>& allocs() const { return allocs_; }
  const std::vector<ir::Copy>& copies() const { return copies_; }
  const std::vector<ir::Load>& loads() const { return loads_; }
  const std::vector<ir::Store>& stores() const { return stores_; }
  const std::vector<ir::Call>& calls() const { return calls_; }

  const MethodVars& method_vars(MethodId m) const { return method_vars_[index(m)]; }

  std::size_t field_count() const { return field_names_.size(); }
  const std::string& field_name(FieldId f) const { return field_names_[index(f)]; }
  std::optional<FieldId> find_field(std::string_view name) const;

  /// Declared class of a variable; absent for return slots and temporaries.
  std::optional<ClassId> declared_class(VarIndex v) const { return declared_[index(v)]; }

  /// Scope (method) of a statement site; absent for the entry block.
  std::optional<MethodId> scope_method(std::uint32_t scope) const;
  /// "A.m@3", "main@1".
  std::string site_name(SiteId site) const;
  std::string var_name(VarIndex v) const { return vars_[v].str(); }

  /// Number of syntactic call sites (including discarded-result calls).
  std::size_t call_site_count() const { return calls_.size(); }

  /// Hash of the program text; results from different programs differ here.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  friend Unit make_unit(Program program);

  Program program_;
  ClassTable classes_;
  VarTable vars_;
  std::vector<ir::Alloc> allocs_;
  std::vector<ir::Copy> copies_;
  std::vector<ir::Load> loads_;
  std::vector<ir::Store> stores_;
  std::vector<ir::Call> calls_;
  std::vector<MethodVars> method_vars_;
  std::vector<std::string> field_names_;
  std::map<std::string, FieldId, std::less<>> field_ids_;
  std::vector<std::optional<ClassId>> declared_;
  std::uint64_t fingerprint_ = 0;
};

/// Builds the class table and variable table and resolves every statement.
/// Throws FrontendError on hierarchy errors.
Unit make_unit(Program program);

/// parse_program followed by make_unit.
Unit load_unit(std::string_view text);

}  // namespace tfa
