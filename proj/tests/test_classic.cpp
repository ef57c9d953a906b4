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
#include "tfa/classic.hpp"

namespace tfa {
namespace {

using testing::names;
using testing::var;
using Names = std::set<std::string>;

Names targets(const Unit& u, const std::vector<MethodId>& ms) {
  Names out;
  for (MethodId m : ms) out.insert(u.classes().qualified_name(m));
  return out;
}

Names targets(const Unit& u, const CallGraph& g) {
  Names out;
  for (const auto& e : g.edges()) out.insert(u.classes().qualified_name(e.target));
  return out;
}

TEST(Cha, ResolvesInheritedAndOverridden) {
  const Unit fig = testing::corpus_unit("running_example.tfl");
  const auto& ct = fig.classes();
  const NameId m = *ct.find_method_name("m");
  EXPECT_EQ(targets(fig, cha_resolve(ct, *ct.find("A"), m)), Names{"A.m"});
  EXPECT_EQ(targets(fig, cha_resolve(ct, *ct.find("B"), m)), Names{"A.m"});

  const Unit chain = testing::corpus_unit("override_chain.tfl");
  const auto& ct2 = chain.classes();
  EXPECT_EQ(targets(chain, cha_resolve(ct2, *ct2.find("A"), *ct2.find_method_name("m"))),
            (Names{"A.m", "B.m", "C.m"}));
}

TEST(Cha, UnknownMethodInSubtreeIsEmpty) {
  const Unit u = load_unit(
      "class A {} class B { n(A p) { return p; } } main { A a; B b; a = new A(); }");
  const auto& ct = u.classes();
  EXPECT_TRUE(cha_resolve(ct, *ct.find("A"), *ct.find_method_name("n")).empty());
}

TEST(Cha, CallGraphs) {
  const Unit fig = testing::corpus_unit("running_example.tfl");
  const auto g = cha_callgraph(fig);
  EXPECT_EQ(g.callgraph.size(), 1u);
  EXPECT_EQ(targets(fig, g.callgraph), Names{"A.m"});

  const Unit chain = testing::corpus_unit("override_chain.tfl");
  EXPECT_EQ(cha_callgraph(chain).callgraph.size(), 3u);

  EXPECT_TRUE(cha_callgraph(load_unit("class A {} main { A x; x = new A(); }")).callgraph.empty());
}

TEST(Rta, InstantiatedClasses) {
  const Unit fig = testing::corpus_unit("running_example.tfl");
  EXPECT_EQ(names(fig, instantiated_classes(fig)), (Names{"A", "B", "C"}));
  EXPECT_TRUE(instantiated_classes(load_unit("class A {} main { A x; }")).empty());
  const Unit twice = load_unit("class A {} main { A x; x = new A(); x = new A(); }");
  EXPECT_EQ(names(twice, instantiated_classes(twice)), Names{"A"});
}

TEST(Rta, FiltersByInstantiation) {
  const Unit fig = testing::corpus_unit("running_example.tfl");
  EXPECT_EQ(rta_callgraph(fig).callgraph, cha_callgraph(fig).callgraph);

  const Unit chain = testing::corpus_unit("override_chain.tfl");
  EXPECT_EQ(targets(chain, rta_callgraph(chain).callgraph), Names{"B.m"});

  const Unit none = load_unit("class A { m(A p) { return p; } } main { A x; x = x.m(x); }");
  EXPECT_TRUE(rta_callgraph(none).callgraph.empty());
}

TEST(Vta, RunningExample) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  const VtaGraph g = vta_propagate(u, cha_callgraph(u).callgraph);
  EXPECT_EQ(names(u, g.reach("A.f")), (Names{"B", "C"}));
  EXPECT_EQ(names(u, g.reach(var(u, "main.z"))), (Names{"B", "C"}));
  EXPECT_EQ(names(u, g.reach("main.z")), (Names{"B", "C"}));
  EXPECT_EQ(names(u, g.reach(var(u, "main.x"))), Names{"A"});
  EXPECT_EQ(targets(u, g.callgraph()), Names{"A.m"});
  EXPECT_THROW(g.reach("B.f"), std::out_of_range);
}

TEST(Vta, EmptyProgram) {
  const Unit u = load_unit("main { }");
  const VtaGraph g = vta_propagate(u, cha_callgraph(u).callgraph);
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Vta, OneNodePerDeclaredField) {
  const Unit u = testing::corpus_unit("field_alias.tfl");
  const VtaGraph g = vta_propagate(u, cha_callgraph(u).callgraph);
  EXPECT_EQ(g.node_count(), u.vars().size() + 1);
  // Both boxes share the node Box.v, so VTA cannot separate them.
  EXPECT_EQ(names(u, g.reach("main.seen")), (Names{"Gem", "Rock"}));
}

TEST(Vta, ReceiverReachesOnlyDispatchedThis) {
  const Unit u = testing::corpus_unit("dispatch_mix.tfl");
  const VtaGraph g = vta_propagate(u, cha_callgraph(u).callgraph);
  EXPECT_EQ(names(u, g.reach("Circle.draw.this")), Names{"Circle"});
  EXPECT_EQ(names(u, g.reach("Shape.draw.this")), Names{"Square"});
}

}  // namespace
}  // namespace tfa
