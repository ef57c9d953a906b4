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

#include "tfa/vars.hpp"

namespace tfa {

const char* to_string(VarKind kind) {
  switch (kind) {
    case VarKind::Local: return "local";
    case VarKind::Param: return "param";
    case VarKind::This: return "this";
    case VarKind::ReturnSlot: return "return-slot";
    case VarKind::Temp: return "temp";
  }
  return "?";
}

std::optional<VarIndex> VarTable::find(std::uint32_t scope, std::string_view name) const {
  const auto& by_name = scopes_[scope].by_name;
  auto it = by_name.find(name);
  if (it == by_name.end()) return std::nullopt;
  return it->second;
}

std::optional<VarIndex> VarTable::find(std::string_view rendered) const {
  auto it = by_rendered_.find(rendered);
  if (it == by_rendered_.end()) return std::nullopt;
  return it->second;
}

VarIndex VarTable::add(std::uint32_t scope, std::string name, VarKind kind,
                       std::optional<std::string> declared) {
  VarIndex v = make_id<VarIndex>(vars_.size());
  VarId id{scope, scopes_[scope].name, std::move(name), kind, std::move(declared)};
  by_rendered_.emplace(id.str(), v);
  if (kind != VarKind::Temp && kind != VarKind::ReturnSlot) {
    scopes_[scope].by_name.emplace(id.name, v);
  }
  vars_.push_back(std::move(id));
  return v;
}

namespace {

bool is_discarded_call(const Stmt& s) {
  const auto* e = std::get_if<ExprStmt>(&s.kind);
  return e != nullptr && std::holds_alternative<CallExpr>(e->expr);
}

}  // namespace

VarTable canonical_vars(const Program& program) {
  VarTable t;
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      t.scopes_.push_back(ScopeVars{cls.name + "." + m.name, cls.name, {}, {}, {}, {}, {}});
    }
  }
  t.scopes_.push_back(ScopeVars{"main", std::nullopt, {}, {}, {}, {}, {}});

  auto add_temps = [&](std::uint32_t scope, const std::vector<Stmt>& body) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (!is_discarded_call(body[i])) continue;
      const auto k = static_cast<std::uint32_t>(i + 1);
      t.scopes_[scope].temps.emplace(
          k, t.add(scope, "$t" + std::to_string(k), VarKind::Temp, std::nullopt));
    }
  };

  std::uint32_t scope = 0;
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      auto& sv = t.scopes_[scope];
      sv.this_var = t.add(scope, "this", VarKind::This, cls.name);
      t.scopes_[scope].param = t.add(scope, m.param.name, VarKind::Param, m.param.class_name);
      for (const auto& d : m.locals) t.add(scope, d.name, VarKind::Local, d.class_name);
      t.scopes_[scope].return_slot =
          t.add(scope, "return", VarKind::ReturnSlot, std::nullopt);
      add_temps(scope, m.body);
      ++scope;
    }
  }
  for (const auto& d : program.entry_locals) t.add(scope, d.name, VarKind::Local, d.class_name);
  add_temps(scope, program.entry_body);
  return t;
}

}  // namespace tfa
