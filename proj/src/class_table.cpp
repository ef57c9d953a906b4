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

#include "tfa/class_table.hpp"

#include <algorithm>

#include "tfa/parser.hpp"

namespace tfa {

std::optional<ClassId> ClassTable::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const FieldInfo* ClassTable::field(ClassId c, std::string_view name) const {
  for (const auto& f : fields_[index(c)]) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string ClassTable::qualified_name(MethodId m) const {
  const auto& info = methods_[index(m)];
  return names_[index(info.owner)] + "." + method_names_[index(info.name)];
}

std::optional<NameId> ClassTable::find_method_name(std::string_view name) const {
  auto it = method_name_ids_.find(name);
  if (it == method_name_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<MethodId> ClassTable::dispatch(ClassId c, std::string_view name) const {
  auto n = find_method_name(name);
  if (!n) return std::nullopt;
  return dispatch(c, *n);
}

std::map<std::string, MethodId> ClassTable::methods(ClassId c) const {
  std::map<std::string, MethodId> out;
  for (std::size_t n = 0; n < method_names_.size(); ++n) {
    if (auto m = dispatch_[index(c)][n]) out.emplace(method_names_[n], *m);
  }
  return out;
}

ClassTable build_class_table(const Program& program) {
  ClassTable t;
  const std::size_t n = program.classes.size();
  for (std::size_t i = 0; i < n; ++i) {
    t.names_.push_back(program.classes[i].name);
    t.by_name_.emplace(program.classes[i].name, make_id<ClassId>(i));
  }

  t.parents_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cls = program.classes[i];
    if (!cls.parent) continue;
    auto p = t.find(*cls.parent);
    if (!p) {
      throw FrontendError(FrontendError::Kind::Hierarchy, cls.pos,
                          "class '" + cls.name + "' extends unknown class '" +
                              *cls.parent + "'");
    }
    t.parents_[i] = *p;
  }

  // Ancestor chains; a chain longer than n means a cycle.
  t.ancestors_.assign(n, ClassSet(n));
  t.descendants_.assign(n, ClassSet(n));
  std::vector<std::vector<ClassId>> chains(n);  // root first
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ClassId> chain;
    std::optional<ClassId> cur = make_id<ClassId>(i);
    while (cur) {
      if (chain.size() > n || !t.ancestors_[i].insert(*cur)) {
        throw FrontendError(FrontendError::Kind::Hierarchy, program.classes[i].pos,
                            "inheritance cycle through class '" +
                                program.classes[i].name + "'");
      }
      chain.push_back(*cur);
      cur = t.parents_[index(*cur)];
    }
    std::reverse(chain.begin(), chain.end());
    for (ClassId a : chain) t.descendants_[index(a)].insert(make_id<ClassId>(i));
    chains[i] = std::move(chain);
  }

  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      if (!t.method_name_ids_.contains(m.name)) {
        t.method_name_ids_.emplace(m.name, make_id<NameId>(t.method_names_.size()));
        t.method_names_.push_back(m.name);
      }
    }
  }
  std::vector<std::vector<MethodId>> declared(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cls = program.classes[i];
    for (std::size_t k = 0; k < cls.methods.size(); ++k) {
      declared[i].push_back(make_id<MethodId>(t.methods_.size()));
      t.methods_.push_back(MethodInfo{make_id<ClassId>(i),
                                      t.method_name_ids_.at(cls.methods[k].name), k});
    }
  }

  t.fields_.resize(n);
  t.dispatch_.assign(n, std::vector<std::optional<MethodId>>(t.method_names_.size()));
  for (std::size_t i = 0; i < n; ++i) {
    auto& fields = t.fields_[i];
    auto& table = t.dispatch_[i];
    for (ClassId a : chains[i]) {  // root to self, so overrides win
      const auto& acls = program.classes[index(a)];
      for (const auto& f : acls.fields) {
        bool hides = std::any_of(fields.begin(), fields.end(),
                                 [&](const FieldInfo& x) { return x.name == f.name; });
        if (hides) {
          throw FrontendError(FrontendError::Kind::Duplicate, f.pos,
                              "field '" + f.name + "' of class '" + acls.name +
                                  "' redeclares an inherited field");
        }
        fields.push_back(FieldInfo{f.name, a, *t.find(f.class_name)});
      }
      for (MethodId m : declared[index(a)]) table[index(t.methods_[index(m)].name)] = m;
    }
  }
  return t;
}

}  // namespace tfa
