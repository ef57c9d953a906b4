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

// Type flow analysis.
//
// Three relations over the variables of a program:
//
//   typeflow     c ⇢ x      class c may reach variable x
//   order        y ⊑ x      every type reaching y also reaches x
//   fieldaccess  x →f y     field f of whatever x holds may hold y
//
// An order pair carries a class-set label: `y ⊑_S x` says the values of y
// whose class is in S reach x. Copies, loads, parameter and return flow give
// pairs labelled with every class (plain `y ⊑ x`). A receiver flows into the
// `this` of a resolved method only for the class that resolved the call, so
// those pairs carry a single class. Labels compose by intersection.
//
// Rules, closed to a least fixpoint:
//
//   1. load x = y.f, y →f z                     =>  z ⊑ x
//   2. c ⇢ x, x ⊑_S y, c ∈ S                    =>  c ⇢ y
//   3. y ⊑_S z, z ⊑_T x                         =>  y ⊑_{S∩T} x
//   4. store x.f = z, w ⊑_S x, w ⊑_T y,
//      c ⇢ w, c ∈ S ∩ T                         =>  y →f z
//   5. call x = y.m(a), c ⇢ y, D.m = dispatch(c, m)
//                                               =>  a ⊑ D.m.param,
//                                                   y ⊑_{c} D.m.this,
//                                                   D.m.return ⊑ x
//
// Rule 4's witness w must carry a class that survives both paths; an untyped
// common lower bound says nothing about aliasing. With these rules the
// reaching types equal the class projection of a subset-based points-to
// analysis, without modelling any heap objects.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tfa/callgraph.hpp"
#include "tfa/ids.hpp"
#include "tfa/unit.hpp"

namespace tfa {

class RelationStore {
 public:
  using Neighbours = std::unordered_map<std::uint32_t, ClassSet>;

  struct OrderTuple {
    VarIndex lower;
    VarIndex upper;
    ClassSet label;
    friend bool operator==(const OrderTuple&, const OrderTuple&) = default;
  };
  using FieldTuple = std::tuple<VarIndex, FieldId, VarIndex>;

  RelationStore() = default;
  RelationStore(std::size_t vars, std::size_t classes);

  std::size_t var_count() const { return types_.size(); }
  std::size_t class_count() const { return classes_; }

  bool add_type(ClassId c, VarIndex v) { return types_[index(v)].insert(c); }
  bool flows(ClassId c, VarIndex v) const { return types_[index(v)].contains(c); }
  const ClassSet& types(VarIndex v) const { return types_[index(v)]; }

  /// Adds `lower ⊑_label upper`; returns the classes not already present.
  /// Reflexive pairs are implicit and never stored.
  ClassSet add_order(VarIndex lower, VarIndex upper, const ClassSet& label);
  /// Full label when lower == upper, empty when the pair is absent.
  ClassSet order_label(VarIndex lower, VarIndex upper) const;
  /// Unrestricted order: lower == upper or the label holds every class.
  bool ordered(VarIndex lower, VarIndex upper) const;
  const Neighbours& uppers(VarIndex lower) const { return up_[index(lower)]; }
  const Neighbours& lowers(VarIndex upper) const { return down_[index(upper)]; }

  bool add_field(VarIndex base, FieldId f, VarIndex target);
  bool accesses(VarIndex base, FieldId f, VarIndex target) const {
    return fields_.contains(key(base, f, target));
  }
  /// Outgoing field edges of a variable, in insertion order.
  const std::vector<std::pair<FieldId, VarIndex>>& field_edges(VarIndex base) const {
    return field_out_[index(base)];
  }

  std::size_t typeflow_size() const;
  /// Unrestricted, non-reflexive order pairs.
  std::size_t order_size() const;
  /// Pairs whose label is a strict subset of the classes.
  std::size_t restricted_order_size() const;
  std::size_t field_size() const { return fields_.size(); }

  // Sorted tuple lists, for comparisons and dumps.
  std::vector<std::pair<ClassId, VarIndex>> typeflow_tuples() const;
  std::vector<OrderTuple> order_tuples() const;
  std::vector<FieldTuple> field_tuples() const;

  friend bool operator==(const RelationStore& a, const RelationStore& b);

 private:
  static std::uint64_t key(VarIndex base, FieldId f, VarIndex target) {
    return (std::uint64_t{index(base)} << 40) | (std::uint64_t{index(f)} << 24) |
           std::uint64_t{index(target)};
  }

  std::size_t classes_ = 0;
  std::vector<ClassSet> types_;
  std::vector<Neighbours> up_;
  std::vector<Neighbours> down_;
  std::unordered_set<std::uint64_t> fields_;
  std::vector<std::vector<std::pair<FieldId, VarIndex>>> field_out_;
};

struct TfaResult {
  RelationStore base;   // facts read directly off the statements
  RelationStore store;  // least fixpoint
  CallGraph callgraph;
  std::size_t iterations = 0;  // worklist facts processed
  std::vector<Diagnostic> diagnostics;
  std::uint64_t fingerprint = 0;
};

/// Base facts: c ⇢ x per `x = new c`, y ⊑ x per `x = y`, x →f y per
/// `x.f = y`. Nothing else.
RelationStore seed_base_relations(const Unit& unit);

/// Semi-naive worklist evaluation of the rules above.
TfaResult tfa_fixpoint(const Unit& unit);

/// Continues from an existing set of facts (which must belong to `unit`).
/// On a fixpoint store this adds nothing.
TfaResult tfa_fixpoint(const Unit& unit, const RelationStore& start);

/// {c | c ⇢ v}. Throws std::out_of_range for an unknown variable.
const ClassSet& reaching_types(const TfaResult& result, VarIndex v);

inline const CallGraph& tfa_callgraph(const TfaResult& result) { return result.callgraph; }

/// Tab-separated dump: `TF <class> <var>`, `ORD <var> <var>`, and
/// `ORDC <var> <var> <class>` for class-restricted order pairs, then
/// `FLD <var> <field> <var>`. Sorted, one tuple per line.
std::string dump_relations(const Unit& unit, const RelationStore& store);

}  // namespace tfa
