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

// Reference call graph analyses: CHA, RTA and VTA.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfa/callgraph.hpp"
#include "tfa/ids.hpp"
#include "tfa/unit.hpp"

namespace tfa {

/// Methods a call on a receiver declared `declared` may reach: the
/// definition every subclass (including `declared`) dispatches to. Sorted.
/// Empty when no class in the subtree understands the name.
std::vector<MethodId> cha_resolve(const ClassTable& ct, ClassId declared, NameId method);

struct ClassicResult {
  CallGraph callgraph;
  std::vector<Diagnostic> diagnostics;
};

ClassicResult cha_callgraph(const Unit& unit);

/// Classes named by some `new`.
ClassSet instantiated_classes(const Unit& unit);

/// CHA edges whose target some instantiated subclass of the receiver's
/// declared class dispatches to.
ClassicResult rta_callgraph(const Unit& unit);

/// Value-flow graph over variables and one node per field, keyed by the
/// class that declares it.
class VtaGraph {
 public:
  std::size_t node_count() const { return reach_.size(); }
  const ClassSet& reach(VarIndex v) const { return reach_.at(index(v)); }
  /// Field node of the field `f` declared by `declaring`, if it exists.
  std::optional<std::size_t> field_node(ClassId declaring, FieldId f) const;
  /// Reach of a node given by name: a variable ("main.z") or a field ("A.f").
  /// Throws std::out_of_range for an unknown name.
  const ClassSet& reach(std::string_view name) const;
  const ClassSet& node_reach(std::size_t node) const { return reach_.at(node); }
  const std::string& node_name(std::size_t node) const { return names_.at(node); }
  std::size_t edge_count() const { return edges_; }
  const CallGraph& callgraph() const { return callgraph_; }

 private:
  friend VtaGraph vta_propagate(const Unit& unit, const CallGraph& cg);

  std::vector<ClassSet> reach_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::pair<ClassId, FieldId>, std::size_t>> fields_;  // sorted
  std::size_t edges_ = 0;
  CallGraph callgraph_;
};

/// Propagates classes over the value-flow graph. Interprocedural edges come
/// from `cg`; the resulting call graph dispatches on reach(receiver).
VtaGraph vta_propagate(const Unit& unit, const CallGraph& cg);

}  // namespace tfa
