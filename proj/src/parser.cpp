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

#include "tfa/parser.hpp"

#include <cctype>
#include <set>
#include <unordered_set>
#include <vector>

namespace tfa {

namespace {

std::string format_error(SourcePos pos, const std::string& message) {
  if (pos.line == 0) return message;
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
         message;
}

enum class Tok { Ident, LBrace, RBrace, LParen, RParen, Semi, Assign, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Assign: return "'='";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Assign; break;
      case '.': kind = Tok::Dot; break;
      default:
        throw FrontendError(FrontendError::Kind::Syntax, pos,
                            std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), pos});
    advance(1);
  }
  out.push_back({Tok::End, "", SourcePos{line, col}});
  return out;
}

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {"class", "extends", "main",
                                                     "return", "new", "null"};
  return kw;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program parse() {
    Program p;
    while (peek_keyword("class")) p.classes.push_back(parse_class());
    expect_keyword("main");
    expect(Tok::LBrace);
    parse_block(p.entry_locals, p.entry_body, /*in_method=*/false);
    expect(Tok::RBrace);
    if (peek().kind != Tok::End) fail(peek().pos, "expected end of input after main block");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool peek_keyword(std::string_view kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == kw;
  }

  [[noreturn]] void fail(SourcePos pos, const std::string& msg) const {
    throw FrontendError(FrontendError::Kind::Syntax, pos, msg);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) {
      fail(peek().pos, std::string("expected ") + describe(kind) + ", found " +
                           (peek().kind == Tok::Ident ? "'" + peek().text + "'"
                                                      : describe(peek().kind)));
    }
    return next();
  }

  void expect_keyword(std::string_view kw) {
    if (!peek_keyword(kw)) {
      fail(peek().pos, "expected '" + std::string(kw) + "'");
    }
    next();
  }

  // An identifier that is not a reserved word.
  const Token& name() {
    const Token& t = expect(Tok::Ident);
    if (keywords().contains(t.text)) fail(t.pos, "unexpected keyword '" + t.text + "'");
    return t;
  }

  ClassDef parse_class() {
    ClassDef cls;
    cls.pos = peek().pos;
    expect_keyword("class");
    cls.name = name().text;
    if (peek_keyword("extends")) {
      next();
      cls.parent = name().text;
    }
    expect(Tok::LBrace);
    // fielddecl := IDENT IDENT ';'   methdecl := IDENT '(' ...
    while (peek().kind == Tok::Ident && peek(1).kind == Tok::Ident) {
      Decl f;
      f.pos = peek().pos;
      f.class_name = name().text;
      f.name = name().text;
      expect(Tok::Semi);
      cls.fields.push_back(std::move(f));
    }
    while (peek().kind == Tok::Ident) cls.methods.push_back(parse_method());
    expect(Tok::RBrace);
    return cls;
  }

  MethodDef parse_method() {
    MethodDef m;
    m.pos = peek().pos;
    m.name = name().text;
    expect(Tok::LParen);
    m.param.pos = peek().pos;
    m.param.class_name = name().text;
    m.param.name = name().text;
    expect(Tok::RParen);
    expect(Tok::LBrace);
    parse_block(m.locals, m.body, /*in_method=*/true);
    expect_keyword("return");
    m.return_var = name().text;
    expect(Tok::Semi);
    expect(Tok::RBrace);
    return m;
  }

  void parse_block(std::vector<Decl>& locals, std::vector<Stmt>& body, bool in_method) {
    while (peek().kind == Tok::Ident && peek(1).kind == Tok::Ident &&
           !keywords().contains(peek().text)) {
      Decl d;
      d.pos = peek().pos;
      d.class_name = name().text;
      d.name = name().text;
      expect(Tok::Semi);
      locals.push_back(std::move(d));
    }
    while (true) {
      if (peek().kind == Tok::RBrace) return;
      if (in_method && peek_keyword("return")) return;
      body.push_back(parse_stmt());
    }
  }

  Stmt parse_stmt() {
    Stmt s;
    s.pos = peek().pos;
    if (peek_keyword("null")) {
      next();
      expect(Tok::Semi);
      s.kind = ExprStmt{NullExpr{}};
      return s;
    }
    const std::string first = name().text;
    if (peek().kind == Tok::Assign) {
      next();
      s.kind = parse_rhs(first);
    } else if (peek().kind == Tok::Dot) {
      next();
      const std::string member = name().text;
      if (peek().kind == Tok::Assign) {
        next();
        s.kind = StoreStmt{first, member, name().text};
      } else if (peek().kind == Tok::LParen) {
        next();
        std::string arg = name().text;
        expect(Tok::RParen);
        s.kind = ExprStmt{CallExpr{first, member, std::move(arg)}};
      } else {
        s.kind = ExprStmt{FieldExpr{first, member}};
      }
    } else {
      s.kind = ExprStmt{VarExpr{first}};
    }
    expect(Tok::Semi);
    return s;
  }

  StmtKind parse_rhs(const std::string& target) {
    if (peek_keyword("new")) {
      next();
      std::string cls = name().text;
      expect(Tok::LParen);
      expect(Tok::RParen);
      return NewStmt{target, std::move(cls)};
    }
    if (peek_keyword("null")) {
      next();
      return NullStmt{target};
    }
    std::string src = name().text;
    if (peek().kind != Tok::Dot) return CopyStmt{target, std::move(src)};
    next();
    std::string member = name().text;
    if (peek().kind != Tok::LParen) return LoadStmt{target, std::move(src), std::move(member)};
    next();
    std::string arg = name().text;
    expect(Tok::RParen);
    return CallStmt{target, std::move(src), std::move(member), std::move(arg)};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class Validator {
 public:
  explicit Validator(const Program& p) : p_(p) {}

  void run() {
    for (const auto& c : p_.classes) {
      if (!classes_.insert(c.name).second) {
        dup(c.pos, "duplicate class '" + c.name + "'");
      }
    }
    for (const auto& c : p_.classes) {
      std::set<std::string> seen;
      for (const auto& f : c.fields) {
        if (!seen.insert(f.name).second) {
          dup(f.pos, "duplicate field '" + f.name + "' in class '" + c.name + "'");
        }
        check_class(f.class_name, f.pos);
        fields_.insert(f.name);
      }
      std::set<std::string> mseen;
      for (const auto& m : c.methods) {
        if (!mseen.insert(m.name).second) {
          dup(m.pos, "duplicate method '" + m.name + "' in class '" + c.name + "'");
        }
        methods_.insert(m.name);
      }
    }
    for (const auto& c : p_.classes) {
      for (const auto& m : c.methods) check_method(m);
    }
    std::set<std::string> scope;
    declare_locals(p_.entry_locals, scope);
    for (const auto& s : p_.entry_body) check_stmt(s, scope);
  }

 private:
  [[noreturn]] static void dup(SourcePos pos, const std::string& msg) {
    throw FrontendError(FrontendError::Kind::Duplicate, pos, msg);
  }
  [[noreturn]] static void unknown(SourcePos pos, const std::string& msg) {
    throw FrontendError(FrontendError::Kind::UnknownIdentifier, pos, msg);
  }

  void check_class(const std::string& name, SourcePos pos) const {
    if (!classes_.contains(name)) unknown(pos, "unknown class '" + name + "'");
  }

  void declare_locals(const std::vector<Decl>& locals, std::set<std::string>& scope) const {
    for (const auto& d : locals) {
      check_class(d.class_name, d.pos);
      if (d.name == "this") {
        dup(d.pos, "'this' cannot be declared");
      }
      if (!scope.insert(d.name).second) {
        dup(d.pos, "duplicate variable '" + d.name + "'");
      }
    }
  }

  void check_method(const MethodDef& m) const {
    std::set<std::string> scope{"this"};
    check_class(m.param.class_name, m.param.pos);
    if (m.param.name == "this") dup(m.param.pos, "'this' cannot be declared");
    scope.insert(m.param.name);
    declare_locals(m.locals, scope);
    for (const auto& s : m.body) check_stmt(s, scope);
    if (!scope.contains(m.return_var)) {
      unknown(m.pos, "unknown return variable '" + m.return_var + "' in method '" +
                         m.name + "'");
    }
  }

  void var(const std::string& name, const std::set<std::string>& scope, SourcePos pos) const {
    if (!scope.contains(name)) unknown(pos, "unknown variable '" + name + "'");
  }
  void target(const std::string& name, const std::set<std::string>& scope, SourcePos pos) const {
    if (name == "this") {
      throw FrontendError(FrontendError::Kind::Syntax, pos, "cannot assign to 'this'");
    }
    var(name, scope, pos);
  }
  void field(const std::string& name, SourcePos pos) const {
    if (!fields_.contains(name)) unknown(pos, "unknown field '" + name + "'");
  }
  void method(const std::string& name, SourcePos pos) const {
    if (!methods_.contains(name)) unknown(pos, "unknown method '" + name + "'");
  }

  void check_stmt(const Stmt& s, const std::set<std::string>& scope) const {
    const SourcePos pos = s.pos;
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, NewStmt>) {
            target(st.target, scope, pos);
            check_class(st.class_name, pos);
          } else if constexpr (std::is_same_v<T, CopyStmt>) {
            target(st.target, scope, pos);
            var(st.source, scope, pos);
          } else if constexpr (std::is_same_v<T, LoadStmt>) {
            target(st.target, scope, pos);
            var(st.base, scope, pos);
            field(st.field, pos);
          } else if constexpr (std::is_same_v<T, StoreStmt>) {
            var(st.base, scope, pos);
            field(st.field, pos);
            var(st.source, scope, pos);
          } else if constexpr (std::is_same_v<T, CallStmt>) {
            target(st.target, scope, pos);
            var(st.receiver, scope, pos);
            method(st.method, pos);
            var(st.arg, scope, pos);
          } else if constexpr (std::is_same_v<T, NullStmt>) {
            target(st.target, scope, pos);
          } else {
            std::visit(
                [&](const auto& e) {
                  using E = std::decay_t<decltype(e)>;
                  if constexpr (std::is_same_v<E, VarExpr>) {
                    var(e.name, scope, pos);
                  } else if constexpr (std::is_same_v<E, FieldExpr>) {
                    var(e.base, scope, pos);
                    field(e.field, pos);
                  } else if constexpr (std::is_same_v<E, CallExpr>) {
                    var(e.receiver, scope, pos);
                    method(e.method, pos);
                    var(e.arg, scope, pos);
                  }
                },
                st.expr);
          }
        },
        s.kind);
  }

  const Program& p_;
  std::set<std::string> classes_;
  std::set<std::string> fields_;
  std::set<std::string> methods_;
};

}  // namespace

FrontendError::FrontendError(Kind kind, SourcePos pos, const std::string& message)
    : std::runtime_error(format_error(pos, message)),
      kind_(kind),
      line_(pos.line),
      column_(pos.column) {}

Program parse_program(std::string_view text) {
  Program p = Parser(tokenize(text)).parse();
  Validator(p).run();
  return p;
}

}  // namespace tfa
