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

#include "tfa/callgraph.hpp"

#include <algorithm>

#include "tfa/unit.hpp"

namespace tfa {

std::vector<MethodId> CallGraph::targets(SiteId site) const {
  std::vector<MethodId> out;
  for (auto it = edges_.lower_bound({site, make_id<MethodId>(0)});
       it != edges_.end() && it->site == site; ++it) {
    out.push_back(it->target);
  }
  return out;
}

bool CallGraph::is_subset_of(const CallGraph& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(),
                       edges_.end());
}

Diagnostic dispatch_failure(const Unit& unit, SiteId site, ClassId cls, NameId method) {
  const auto& ct = unit.classes();
  return Diagnostic{site, cls,
                    unit.site_name(site) + ": class '" + ct.name(cls) +
                        "' has no method '" + ct.method_name(method) + "'"};
}

}  // namespace tfa
