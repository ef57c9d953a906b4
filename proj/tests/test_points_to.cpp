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
#include "tfa/points_to.hpp"

namespace tfa {
namespace {

using testing::names;
using testing::var;
using Names = std::set<std::string>;

std::set<std::string> objects(const Unit& u, const PtaResult& r, const ObjectSet& s) {
  std::set<std::string> out;
  for (auto o = s.find_first(); o != ObjectSet::npos; o = s.find_next(o)) {
    out.insert(u.site_name(r.sites[o].site));
  }
  return out;
}

TEST(PointsTo, RunningExample) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  const PtaResult r = pta_fixpoint(u);
  EXPECT_EQ(objects(u, r, r.env[index(var(u, "main.z"))]), Names{"main@2"});
  EXPECT_EQ(objects(u, r, r.cell(0, *u.find_field("f"))), Names{"main@2"});
  EXPECT_EQ(objects(u, r, r.cell(2, *u.find_field("f"))), Names{"main@4"});
  EXPECT_EQ(r.heap.size(), 2u);
  EXPECT_EQ(names(u, class_projection(r, var(u, "main.z"))), Names{"B"});
  EXPECT_EQ(names(u, class_projection(r, var(u, "main.x"))), Names{"A"});
  ASSERT_EQ(r.callgraph.size(), 1u);
  EXPECT_TRUE(r.callgraph.contains(u.calls()[0].site, testing::method(u, "A", "m")));
}

TEST(PointsTo, NoAllocation) {
  const Unit u = load_unit("class A { A f; } main { A x; A y; x = y; y = x.f; }");
  const PtaResult r = pta_fixpoint(u);
  for (const auto& p : r.env) EXPECT_TRUE(p.none());
  EXPECT_TRUE(class_projection(r, var(u, "main.x")).empty());
  EXPECT_TRUE(r.heap.empty());
}

TEST(PointsTo, SameClassSitesGiveOneEdge) {
  const Unit u = load_unit(
      "class A { m(A p) { return p; } }\n"
      "main { A x; A y; x = new A(); y = new A(); x = y; y = x.m(y); }");
  const PtaResult r = pta_fixpoint(u);
  EXPECT_EQ(r.env[index(var(u, "main.x"))].count(), 2u);
  EXPECT_EQ(r.callgraph.size(), 1u);
}

TEST(PointsTo, ThisAccumulatesReceivers) {
  const Unit u = load_unit(
      "class A { m(A p) { return this; } }\n"
      "main { A x; A y; A r; x = new A(); y = new A(); r = x.m(x); r = y.m(y); }");
  const PtaResult r = pta_fixpoint(u);
  EXPECT_EQ(objects(u, r, r.env[index(var(u, "A.m.this"))]), (Names{"main@1", "main@2"}));
}

TEST(PointsTo, ThisHoldsOnlyDispatchingObjects) {
  const Unit u = testing::corpus_unit("dispatch_mix.tfl");
  const PtaResult r = pta_fixpoint(u);
  EXPECT_EQ(names(u, class_projection(r, var(u, "Circle.draw.this"))), Names{"Circle"});
  EXPECT_EQ(names(u, class_projection(r, var(u, "Shape.draw.this"))), Names{"Square"});
}

TEST(PointsTo, DumpFormat) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  const std::string dump = dump_points_to(u, pta_fixpoint(u));
  EXPECT_NE(dump.find("PTS\tmain.z\tmain@2:B\n"), std::string::npos);
  EXPECT_NE(dump.find("HEAP\tmain@1.f\tmain@2\n"), std::string::npos);
  EXPECT_NE(dump.find("HEAP\tmain@3.f\tmain@4\n"), std::string::npos);
}

TEST(PointsTo, UnknownVariableThrows) {
  const Unit u = testing::corpus_unit("running_example.tfl");
  EXPECT_THROW(class_projection(pta_fixpoint(u), make_id<VarIndex>(1000)), std::out_of_range);
}

// Merging allocation sites by class never shrinks the class projection: the
// projection equals the union of the classes of the individual objects.
TEST(PointsTo, SiteLevelRefinesClassLevel) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Unit u = make_unit(gen_program(testing::property_config(seed)));
    const PtaResult r = pta_fixpoint(u);
    for (std::size_t v = 0; v < r.env.size(); ++v) {
      const ClassSet proj = class_projection(r, make_id<VarIndex>(v));
      EXPECT_EQ(proj.size() <= r.env[v].count(), true);
      EXPECT_EQ(proj.empty(), r.env[v].none());
    }
  }
}

}  // namespace
}  // namespace tfa
