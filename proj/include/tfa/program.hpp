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

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tfa {

/// Line/column of a token in the source text, 1-based.
///
/// Positions exist for diagnostics only. Two positions always compare equal so
/// that structural AST equality ignores where a construct was written.
struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

/// `C x;` as a local, a field, or a method parameter.
struct Decl {
  std::string class_name;
  std::string name;
  SourcePos pos;

  friend bool operator==(const Decl&, const Decl&) = default;
};

// Statement forms of the core calculus.

struct NewStmt {
  std::string target;
  std::string class_name;
  friend bool operator==(const NewStmt&, const NewStmt&) = default;
};

struct CopyStmt {
  std::string target;
  std::string source;
  friend bool operator==(const CopyStmt&, const CopyStmt&) = default;
};

struct LoadStmt {
  std::string target;
  std::string base;
  std::string field;
  friend bool operator==(const LoadStmt&, const LoadStmt&) = default;
};

struct StoreStmt {
  std::string base;
  std::string field;
  std::string source;
  friend bool operator==(const StoreStmt&, const StoreStmt&) = default;
};

struct CallStmt {
  std::string target;
  std::string receiver;
  std::string method;
  std::string arg;
  friend bool operator==(const CallStmt&, const CallStmt&) = default;
};

struct NullStmt {
  std::string target;
  friend bool operator==(const NullStmt&, const NullStmt&) = default;
};

// Expressions that may stand alone as `e;`.

struct NullExpr {
  friend bool operator==(const NullExpr&, const NullExpr&) = default;
};

struct VarExpr {
  std::string name;
  friend bool operator==(const VarExpr&, const VarExpr&) = default;
};

struct FieldExpr {
  std::string base;
  std::string field;
  friend bool operator==(const FieldExpr&, const FieldExpr&) = default;
};

struct CallExpr {
  std::string receiver;
  std::string method;
  std::string arg;
  friend bool operator==(const CallExpr&, const CallExpr&) = default;
};

using Expr = std::variant<NullExpr, VarExpr, FieldExpr, CallExpr>;

/// `e;` -- only the call form has an analysis effect (its result goes to a
/// throwaway variable); the other forms are no-ops.
struct ExprStmt {
  Expr expr;
  friend bool operator==(const ExprStmt&, const ExprStmt&) = default;
};

using StmtKind = std::variant<NewStmt, CopyStmt, LoadStmt, StoreStmt, CallStmt,
                              NullStmt, ExprStmt>;

struct Stmt {
  StmtKind kind;
  SourcePos pos;

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

/// `m(C x) { D*; s*; return y; }`
struct MethodDef {
  std::string name;
  Decl param;
  std::vector<Decl> locals;
  std::vector<Stmt> body;
  std::string return_var;
  SourcePos pos;

  friend bool operator==(const MethodDef&, const MethodDef&) = default;
};

struct ClassDef {
  std::string name;
  std::optional<std::string> parent;
  std::vector<Decl> fields;
  std::vector<MethodDef> methods;
  SourcePos pos;

  friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

/// A whole program: class declarations followed by the `main` block, which
/// acts as the static entry method.
struct Program {
  std::vector<ClassDef> classes;
  std::vector<Decl> entry_locals;
  std::vector<Stmt> entry_body;

  friend bool operator==(const Program&, const Program&) = default;
};

/// Renders a program in the `.tfl` concrete syntax. Parsing the output yields
/// a structurally equal program.
std::string pretty_print(const Program& program);

std::string pretty_print(const Stmt& stmt);

}  // namespace tfa
