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

#include "oracle/naive.hpp"
#include "support.hpp"
#include "tfa/diff.hpp"
#include "tfa/minimize.hpp"

namespace tfa {
namespace {

// Checks every relation of the worklist result against the naive one.
::testing::AssertionResult same_tfa(const Unit& u, const TfaResult& r,
                                    const oracle::NaiveTfa& n) {
  const std::size_t nv = u.vars().size();
  if (r.store.var_count() != nv) return ::testing::AssertionFailure() << "size";
  for (std::size_t v = 0; v < nv; ++v) {
    if (r.store.types(make_id<VarIndex>(v)) != n.types[v]) {
      return ::testing::AssertionFailure() << "types of " << u.var_name(make_id<VarIndex>(v));
    }
    for (std::size_t w = 0; w < nv; ++w) {
      ClassSet label(u.classes().size());
      for (std::size_t c = 0; c < u.classes().size(); ++c) {
        if (n.order[c][v].test(w)) label.insert(make_id<ClassId>(c));
      }
      if (r.store.order_label(make_id<VarIndex>(v), make_id<VarIndex>(w)) != label) {
        return ::testing::AssertionFailure() << "order " << u.var_name(make_id<VarIndex>(v))
                                             << " " << u.var_name(make_id<VarIndex>(w));
      }
    }
  }
  const auto tuples = r.store.field_tuples();
  if (std::set(tuples.begin(), tuples.end()) != n.fields) {
    return ::testing::AssertionFailure() << "field access";
  }
  if (!(r.callgraph == n.callgraph)) return ::testing::AssertionFailure() << "call graph";
  return ::testing::AssertionSuccess();
}

::testing::AssertionResult same_pta(const Unit& u, const PtaResult& r,
                                    const oracle::NaivePta& n) {
  if (r.env != n.env) return ::testing::AssertionFailure() << "points-to sets";
  for (std::size_t o = 0; o < n.heap.size(); ++o) {
    for (std::size_t f = 0; f < u.field_count(); ++f) {
      if (r.cell(o, make_id<FieldId>(f)) != n.heap[o][f]) {
        return ::testing::AssertionFailure() << "heap cell";
      }
    }
  }
  if (!(r.callgraph == n.callgraph)) return ::testing::AssertionFailure() << "call graph";
  return ::testing::AssertionSuccess();
}

TEST(Oracle, CorpusMatchesNaiveEvaluation) {
  for (const auto& name : testing::corpus_names()) {
    const Unit u = testing::corpus_unit(name);
    EXPECT_TRUE(same_tfa(u, tfa_fixpoint(u), oracle::naive_tfa(u))) << name;
    EXPECT_TRUE(same_pta(u, pta_fixpoint(u), oracle::naive_pta(u))) << name;
  }
}

TEST(Oracle, GeneratedMatchNaiveEvaluation) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Unit u = make_unit(gen_program(testing::property_config(seed)));
    ASSERT_TRUE(same_tfa(u, tfa_fixpoint(u), oracle::naive_tfa(u))) << "seed " << seed;
    ASSERT_TRUE(same_pta(u, pta_fixpoint(u), oracle::naive_pta(u))) << "seed " << seed;
  }
}

// The precision ladder and equivalence on the hand-written corpus.
TEST(Properties, CorpusLadderAndEquivalence) {
  for (const auto& name : testing::corpus_names()) {
    const Unit u = testing::corpus_unit(name);
    const AnalysisSuite s = run_all(u);
    EXPECT_TRUE(check_theorem1(s.tfa, s.pta).ok) << name;
    EXPECT_EQ(s.tfa.callgraph, s.pta.callgraph) << name;
    EXPECT_TRUE(s.tfa.callgraph.is_subset_of(s.vta.callgraph())) << name;
    EXPECT_TRUE(s.vta.callgraph().is_subset_of(s.rta.callgraph)) << name;
    EXPECT_TRUE(s.rta.callgraph.is_subset_of(s.cha.callgraph)) << name;
    for (std::size_t v = 0; v < u.vars().size(); ++v) {
      EXPECT_TRUE(reaching_types(s.tfa, make_id<VarIndex>(v))
                      .is_subset_of(s.vta.reach(make_id<VarIndex>(v))))
          << name << " " << u.var_name(make_id<VarIndex>(v));
    }
    EXPECT_TRUE(check_refinement(alias_scc(s.tfa), bisim_minimize(s.tfa))) << name;
  }
}

}  // namespace
}  // namespace tfa
