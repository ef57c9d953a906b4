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

#include <gtest/gtest.h>

#include "support.hpp"
#include "tfa/class_table.hpp"
#include "tfa/parser.hpp"

namespace tfa {
namespace {

using testing::read_corpus;

FrontendError parse_error(const std::string& text) {
  try {
    load_unit(text);
  } catch (const FrontendError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a frontend error for:\n" << text;
  return FrontendError(FrontendError::Kind::Syntax, {}, "none");
}

TEST(Parser, ReadsRunningExample) {
  const Program p = parse_program(read_corpus("running_example.tfl"));
  ASSERT_EQ(p.classes.size(), 3u);
  EXPECT_EQ(p.classes[1].parent, "A");
  EXPECT_EQ(p.classes[0].methods[0].return_var, "r");
  EXPECT_EQ(p.entry_locals.size(), 5u);
  EXPECT_EQ(p.entry_body.size(), 7u);
  EXPECT_TRUE(std::holds_alternative<CallStmt>(p.entry_body[6].kind));
}

TEST(Parser, PrettyPrintRoundTrips) {
  for (const auto& name : testing::corpus_names()) {
    const Program p = parse_program(read_corpus(name));
    const std::string text = pretty_print(p);
    EXPECT_EQ(parse_program(text), p) << name;
    EXPECT_EQ(pretty_print(parse_program(text)), text) << name;
  }
}

TEST(Parser, ExpressionStatements) {
  const Program p = parse_program(
      "class A { A f; m(A p) { return p; } }\n"
      "main { A x; x; x.f; null; x.m(x); x = null; }");
  ASSERT_EQ(p.entry_body.size(), 5u);
  const Unit u = make_unit(p);
  EXPECT_EQ(u.calls().size(), 1u);
  EXPECT_EQ(u.var_name(u.calls()[0].target), "main.$t4");
  EXPECT_TRUE(u.copies().empty());
  EXPECT_TRUE(u.loads().empty());
}

TEST(Parser, SyntaxErrorCarriesPosition) {
  const auto e = parse_error("class A {\n  A f\n}\nmain {}");
  EXPECT_EQ(e.kind(), FrontendError::Kind::Syntax);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 1);
  EXPECT_NE(std::string(e.what()).find("3:1:"), std::string::npos);
}

TEST(Parser, RejectsDuplicates) {
  EXPECT_EQ(parse_error("class A {} class A {} main {}").kind(), FrontendError::Kind::Duplicate);
  EXPECT_EQ(parse_error("class A { A f; A f; } main {}").kind(), FrontendError::Kind::Duplicate);
  EXPECT_EQ(parse_error("class A {} main { A x; A x; }").kind(), FrontendError::Kind::Duplicate);
  EXPECT_EQ(parse_error("class A { m(A p) { A p; return p; } } main {}").kind(),
            FrontendError::Kind::Duplicate);
}

TEST(Parser, RejectsUnknownNames) {
  using K = FrontendError::Kind;
  EXPECT_EQ(parse_error("main { B x; }").kind(), K::UnknownIdentifier);
  EXPECT_EQ(parse_error("class A {} main { A x; y = x; }").kind(), K::UnknownIdentifier);
  EXPECT_EQ(parse_error("class A {} main { A x; x = x.g; }").kind(), K::UnknownIdentifier);
  EXPECT_EQ(parse_error("class A {} main { A x; x = x.m(x); }").kind(), K::UnknownIdentifier);
  EXPECT_EQ(parse_error("class A { m(A p) { return q; } } main {}").kind(), K::UnknownIdentifier);
}

TEST(Parser, ThisIsNotAssignable) {
  const auto e = parse_error("class A { m(A p) { this = p; return p; } } main {}");
  EXPECT_EQ(e.kind(), FrontendError::Kind::Syntax);
  EXPECT_NE(std::string(e.what()).find("cannot assign to 'this'"), std::string::npos);
  EXPECT_NO_THROW(load_unit("class A { A f; m(A p) { this.f = p; p = this; return this; } } main {}"));
}

TEST(ClassTable, RejectsBadHierarchies) {
  using K = FrontendError::Kind;
  EXPECT_EQ(parse_error("class A extends Z {} main {}").kind(), K::Hierarchy);
  EXPECT_EQ(parse_error("class A extends B {} class B extends A {} main {}").kind(), K::Hierarchy);
  EXPECT_EQ(parse_error("class A { A f; } class B extends A { A f; } main {}").kind(),
            K::Duplicate);
}

TEST(ClassTable, DispatchAndSubclassing) {
  const Unit u = testing::corpus_unit("override_chain.tfl");
  const auto& ct = u.classes();
  const ClassId a = *ct.find("A"), b = *ct.find("B"), c = *ct.find("C");
  EXPECT_TRUE(ct.is_subclass(b, a));
  EXPECT_TRUE(ct.is_subclass(a, a));
  EXPECT_FALSE(ct.is_subclass(a, b));
  EXPECT_EQ(ct.descendants(a).size(), 3u);
  EXPECT_EQ(ct.qualified_name(*ct.dispatch(b, "m")), "B.m");
  EXPECT_EQ(ct.qualified_name(*ct.dispatch(c, "m")), "C.m");
  EXPECT_FALSE(ct.dispatch(a, "nope").has_value());
}

TEST(ClassTable, InheritedMembers) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  const auto& ct = u.classes();
  const ClassId b = *ct.find("B");
  ASSERT_NE(ct.field(b, "f"), nullptr);
  EXPECT_EQ(ct.name(ct.field(b, "f")->declaring), "A");
  EXPECT_EQ(ct.qualified_name(*ct.dispatch(b, "m")), "A.m");
  EXPECT_EQ(ct.methods(b).size(), 1u);
}

TEST(Vars, CanonicalOrderAndNames) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  std::vector<std::string> got;
  for (const auto& v : u.vars().all()) got.push_back(v.str());
  const std::vector<std::string> want{"A.m.this", "A.m.p",  "A.m.r",  "A.m.return", "main.x",
                                      "main.b",   "main.y", "main.c", "main.z"};
  EXPECT_EQ(got, want);
  EXPECT_EQ(u.site_name(u.calls()[0].site), "main@7");
  EXPECT_EQ(u.site_name(u.allocs()[0].site), "main@1");
  EXPECT_EQ(u.classes().name(*u.declared_class(testing::var(u, "A.m.this"))), "A");
  EXPECT_FALSE(u.declared_class(testing::var(u, "A.m.return")).has_value());
}

TEST(Unit, FingerprintIgnoresLayout) {
  const Unit a = load_unit("class A {} main { A x; x = new A(); }");
  const Unit b = load_unit("class A {}\n// note\nmain {\n A x;\n x = new A();\n}\n");
  const Unit c = load_unit("class A {} main { A y; y = new A(); }");
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  EXPECT_NE(a.fingerprint(), c.fingerprint());
}

}  // namespace
}  // namespace tfa
