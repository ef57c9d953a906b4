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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfa/ids.hpp"
#include "tfa/program.hpp"

namespace tfa {

enum class VarKind { Local, Param, This, ReturnSlot, Temp };

const char* to_string(VarKind kind);

/// A statement position: scope number plus 1-based statement index within
/// that scope's body. Scopes are numbered method by method in declaration
/// order; the entry block comes last.
struct SiteId {
  std::uint32_t scope = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const SiteId&, const SiteId&) = default;
};

/// Context-insensitive identity of a variable: enclosing scope plus name.
/// Rendered `Class.method.name`, or `main.name` in the entry block.
struct VarId {
  std::uint32_t scope = 0;
  std::string scope_name;  // "A.m" or "main"
  std::string name;        // "this" and "return" for the implicit slots
  VarKind kind = VarKind::Local;
  std::optional<std::string> declared_class;  // absent for return/temp slots

  std::string str() const { return scope_name + "." + name; }
};

struct ScopeVars {
  std::string name;
  std::optional<std::string> owner_class;  // absent for the entry block
  std::optional<VarIndex> this_var;
  std::optional<VarIndex> param;
  std::optional<VarIndex> return_slot;
  std::map<std::string, VarIndex, std::less<>> by_name;
  std::map<std::uint32_t, VarIndex> temps;  // statement index -> throwaway
};

/// Every variable of a program, in canonical order: methods in declaration
/// order (this, parameter, locals, return slot, call temporaries), then the
/// entry block (locals, temporaries).
class VarTable {
 public:
  std::size_t size() const { return vars_.size(); }
  const VarId& operator[](VarIndex v) const { return vars_[index(v)]; }
  const std::vector<VarId>& all() const { return vars_; }

  std::size_t scope_count() const { return scopes_.size(); }
  const ScopeVars& scope(std::uint32_t s) const { return scopes_[s]; }
  std::uint32_t entry_scope() const { return static_cast<std::uint32_t>(scopes_.size() - 1); }

  /// Looks a variable up by source name within a scope.
  std::optional<VarIndex> find(std::uint32_t scope, std::string_view name) const;
  /// Looks a variable up by its rendered identity, e.g. "A.m.this".
  std::optional<VarIndex> find(std::string_view rendered) const;

 private:
  friend VarTable canonical_vars(const Program& program);

  VarIndex add(std::uint32_t scope, std::string name, VarKind kind,
               std::optional<std::string> declared);

  std::vector<VarId> vars_;
  std::vector<ScopeVars> scopes_;
  std::map<std::string, VarIndex, std::less<>> by_rendered_;
};

VarTable canonical_vars(const Program& program);

}  // namespace tfa
