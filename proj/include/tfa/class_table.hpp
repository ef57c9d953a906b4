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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfa/ids.hpp"
#include "tfa/program.hpp"

namespace tfa {

struct FieldInfo {
  std::string name;
  ClassId declaring;
  ClassId type;  // declared class of the field
};

struct MethodInfo {
  ClassId owner;
  NameId name;
  std::size_t index_in_class;  // position in ClassDef::methods
};

/// Resolved class hierarchy: subclassing, inherited fields and method
/// dispatch. ClassId i is the i-th class of the program.
class ClassTable {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name(ClassId c) const { return names_[index(c)]; }
  std::optional<ClassId> find(std::string_view name) const;
  std::optional<ClassId> parent(ClassId c) const { return parents_[index(c)]; }

  /// Reflexive-transitive `extends`.
  bool is_subclass(ClassId sub, ClassId super) const {
    return ancestors_[index(sub)].contains(super);
  }
  /// Every class c' with is_subclass(c', c), including c.
  const ClassSet& descendants(ClassId c) const { return descendants_[index(c)]; }

  /// All fields of c, inherited ones first.
  const std::vector<FieldInfo>& fields(ClassId c) const { return fields_[index(c)]; }
  const FieldInfo* field(ClassId c, std::string_view name) const;

  std::size_t method_count() const { return methods_.size(); }
  const MethodInfo& method(MethodId m) const { return methods_[index(m)]; }
  std::string qualified_name(MethodId m) const;

  std::size_t method_name_count() const { return method_names_.size(); }
  const std::string& method_name(NameId n) const { return method_names_[index(n)]; }
  std::optional<NameId> find_method_name(std::string_view name) const;

  /// Nearest definition of `name` in c or its ancestors.
  std::optional<MethodId> dispatch(ClassId c, NameId name) const {
    return dispatch_[index(c)][index(name)];
  }
  std::optional<MethodId> dispatch(ClassId c, std::string_view name) const;

  /// methods(c): every method name visible in c, mapped to its defining method.
  std::map<std::string, MethodId> methods(ClassId c) const;

 private:
  friend ClassTable build_class_table(const Program& program);

  std::vector<std::string> names_;
  std::map<std::string, ClassId, std::less<>> by_name_;
  std::vector<std::optional<ClassId>> parents_;
  std::vector<ClassSet> ancestors_;
  std::vector<ClassSet> descendants_;
  std::vector<std::vector<FieldInfo>> fields_;
  std::vector<MethodInfo> methods_;
  std::vector<std::string> method_names_;
  std::map<std::string, NameId, std::less<>> method_name_ids_;
  std::vector<std::vector<std::optional<MethodId>>> dispatch_;
};

/// Throws FrontendError (Kind::Hierarchy) on a missing `extends` target or an
/// inheritance cycle, and (Kind::Duplicate) when a class redeclares a field it
/// already inherits.
ClassTable build_class_table(const Program& program);

}  // namespace tfa
