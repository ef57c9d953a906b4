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

#include <sstream>

#include "tfa/program.hpp"

namespace tfa {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string render(const Expr& e) {
  return std::visit(
      overloaded{
          [](const NullExpr&) -> std::string { return "null"; },
          [](const VarExpr& v) { return v.name; },
          [](const FieldExpr& f) { return f.base + "." + f.field; },
          [](const CallExpr& c) { return c.receiver + "." + c.method + "(" + c.arg + ")"; },
      },
      e);
}

void print_block(std::ostringstream& os, const std::vector<Decl>& locals,
                 const std::vector<Stmt>& body, const char* indent) {
  for (const auto& d : locals) os << indent << d.class_name << ' ' << d.name << ";\n";
  for (const auto& s : body) os << indent << pretty_print(s) << '\n';
}

}  // namespace

std::string pretty_print(const Stmt& stmt) {
  return std::visit(
      overloaded{
          [](const NewStmt& s) { return s.target + " = new " + s.class_name + "();"; },
          [](const CopyStmt& s) { return s.target + " = " + s.source + ";"; },
          [](const LoadStmt& s) { return s.target + " = " + s.base + "." + s.field + ";"; },
          [](const StoreStmt& s) { return s.base + "." + s.field + " = " + s.source + ";"; },
          [](const CallStmt& s) {
            return s.target + " = " + s.receiver + "." + s.method + "(" + s.arg + ");";
          },
          [](const NullStmt& s) { return s.target + " = null;"; },
          [](const ExprStmt& s) { return render(s.expr) + ";"; },
      },
      stmt.kind);
}

std::string pretty_print(const Program& program) {
  std::ostringstream os;
  for (const auto& c : program.classes) {
    os << "class " << c.name;
    if (c.parent) os << " extends " << *c.parent;
    os << " {\n";
    for (const auto& f : c.fields) os << "  " << f.class_name << ' ' << f.name << ";\n";
    for (const auto& m : c.methods) {
      os << "  " << m.name << "(" << m.param.class_name << ' ' << m.param.name << ") {\n";
      print_block(os, m.locals, m.body, "    ");
      os << "    return " << m.return_var << ";\n  }\n";
    }
    os << "}\n";
  }
  os << "main {\n";
  print_block(os, program.entry_locals, program.entry_body, "  ");
  os << "}\n";
  return os.str();
}

}  // namespace tfa
