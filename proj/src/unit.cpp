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

#include "tfa/unit.hpp"

#include "tfa/parser.hpp"

namespace tfa {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// FNV-1a, 64 bit.
std::uint64_t hash_text(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::optional<FieldId> Unit::find_field(std::string_view name) const {
  auto it = field_ids_.find(name);
  if (it == field_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<MethodId> Unit::scope_method(std::uint32_t scope) const {
  if (scope >= classes_.method_count()) return std::nullopt;
  return make_id<MethodId>(scope);
}

std::string Unit::site_name(SiteId site) const {
  return vars_.scope(site.scope).name + "@" + std::to_string(site.index);
}

Unit make_unit(Program program) {
  Unit u;
  u.classes_ = build_class_table(program);
  u.vars_ = canonical_vars(program);
  u.fingerprint_ = hash_text(pretty_print(program));

  for (const auto& cls : program.classes) {
    for (const auto& f : cls.fields) {
      if (!u.field_ids_.contains(f.name)) {
        u.field_ids_.emplace(f.name, make_id<FieldId>(u.field_names_.size()));
        u.field_names_.push_back(f.name);
      }
    }
  }

  u.declared_.reserve(u.vars_.size());
  for (const auto& v : u.vars_.all()) {
    u.declared_.push_back(v.declared_class ? u.classes_.find(*v.declared_class)
                                           : std::nullopt);
  }

  const auto& ct = u.classes_;
  auto lower_body = [&](std::uint32_t scope, const std::vector<Stmt>& body) {
    const auto& sv = u.vars_.scope(scope);
    auto var = [&](const std::string& name) { return *u.vars_.find(scope, name); };
    auto field = [&](const std::string& name) { return u.field_ids_.at(name); };
    for (std::size_t i = 0; i < body.size(); ++i) {
      const SiteId site{scope, static_cast<std::uint32_t>(i + 1)};
      std::visit(
          overloaded{
              [&](const NewStmt& s) {
                u.allocs_.push_back({var(s.target), *ct.find(s.class_name), site});
              },
              [&](const CopyStmt& s) { u.copies_.push_back({var(s.target), var(s.source)}); },
              [&](const LoadStmt& s) {
                u.loads_.push_back({var(s.target), var(s.base), field(s.field)});
              },
              [&](const StoreStmt& s) {
                u.stores_.push_back({var(s.base), field(s.field), var(s.source)});
              },
              [&](const CallStmt& s) {
                u.calls_.push_back({var(s.target), var(s.receiver), var(s.arg),
                                    *ct.find_method_name(s.method), site});
              },
              [&](const NullStmt&) {},
              [&](const ExprStmt& s) {
                if (const auto* c = std::get_if<CallExpr>(&s.expr)) {
                  u.calls_.push_back({sv.temps.at(site.index), var(c->receiver),
                                      var(c->arg), *ct.find_method_name(c->method), site});
                }
              },
          },
          body[i].kind);
    }
  };

  std::uint32_t scope = 0;
  for (const auto& cls : program.classes) {
    for (const auto& m : cls.methods) {
      const auto& sv = u.vars_.scope(scope);
      u.method_vars_.push_back(MethodVars{*sv.this_var, *sv.param,
                                          *u.vars_.find(scope, m.return_var),
                                          *sv.return_slot});
      lower_body(scope, m.body);
      ++scope;
    }
  }
  lower_body(scope, program.entry_body);

  u.program_ = std::move(program);
  return u;
}

Unit load_unit(std::string_view text) { return make_unit(parse_program(text)); }

}  // namespace tfa
