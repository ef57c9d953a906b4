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

#include <compare>
#include <cstdint>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "tfa/ids.hpp"
#include "tfa/vars.hpp"

namespace tfa {

class Unit;

struct CallEdge {
  SiteId site;
  MethodId target;  // the defining method the site dispatches to

  friend auto operator<=>(const CallEdge&, const CallEdge&) = default;
};

/// Resolved call edges of one program.
class CallGraph {
 public:
  CallGraph() = default;
  explicit CallGraph(std::uint64_t fingerprint) : fingerprint_(fingerprint) {}

  bool add(SiteId site, MethodId target) { return edges_.insert({site, target}).second; }
  bool contains(SiteId site, MethodId target) const { return edges_.contains({site, target}); }
  const std::set<CallEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::vector<MethodId> targets(SiteId site) const;
  bool is_subset_of(const CallGraph& other) const;

  /// Identifies the program the edges belong to.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const CallGraph& a, const CallGraph& b) { return a.edges_ == b.edges_; }

 private:
  std::uint64_t fingerprint_ = 0;
  std::set<CallEdge> edges_;
};

/// A dispatch that found no method (receiver class lacks the method name).
/// Reported, never fatal; the edge is simply omitted.
struct Diagnostic {
  SiteId site;
  ClassId receiver_class;
  std::string message;

  friend auto operator<=>(const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.site, a.receiver_class) <=> std::tie(b.site, b.receiver_class);
  }
  friend bool operator==(const Diagnostic& a, const Diagnostic& b) {
    return a.site == b.site && a.receiver_class == b.receiver_class;
  }
};

Diagnostic dispatch_failure(const Unit& unit, SiteId site, ClassId cls, NameId method);

}  // namespace tfa
