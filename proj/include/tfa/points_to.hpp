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

// Subset-based, context-insensitive points-to analysis with an on-the-fly
// call graph. One abstract object per `new` statement.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tfa/callgraph.hpp"
#include "tfa/ids.hpp"
#include "tfa/unit.hpp"

namespace tfa {

struct AllocSite {
  SiteId site;
  ClassId cls;
};

/// A set of abstract objects, indexed like Unit::allocs().
using ObjectSet = boost::dynamic_bitset<>;

struct PtaResult {
  std::vector<AllocSite> sites;
  std::vector<ObjectSet> env;                          // per variable
  std::map<std::pair<std::size_t, FieldId>, ObjectSet> heap;  // non-empty cells only
  CallGraph callgraph;
  std::size_t iterations = 0;
  std::vector<Diagnostic> diagnostics;
  std::uint64_t fingerprint = 0;
  std::size_t class_count = 0;

  /// Objects held in field f of object o; empty when the cell is absent.
  ObjectSet cell(std::size_t o, FieldId f) const;
};

PtaResult pta_fixpoint(const Unit& unit);

/// {class of o | o points-to from v}. Throws std::out_of_range for an
/// unknown variable.
ClassSet class_projection(const PtaResult& result, VarIndex v);

inline const CallGraph& pta_callgraph(const PtaResult& result) { return result.callgraph; }

/// `PTS <var> <site>:<class>` then `HEAP <site>.<field> <site>`, sorted.
std::string dump_points_to(const Unit& unit, const PtaResult& result);

}  // namespace tfa
