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

#include "tfa/classic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tfa {

std::vector<MethodId> cha_resolve(const ClassTable& ct, ClassId declared, NameId method) {
  std::set<MethodId> out;
  ct.descendants(declared).for_each([&](ClassId c) {
    if (auto m = ct.dispatch(c, method)) out.insert(*m);
  });
  return {out.begin(), out.end()};
}

namespace {

ClassId receiver_class(const Unit& unit, const ir::Call& call) {
  auto cls = unit.declared_class(call.receiver);
  if (!cls) throw std::logic_error("call receiver without declared class");
  return *cls;
}

Diagnostic unresolved(const Unit& unit, const ir::Call& call, ClassId declared) {
  return dispatch_failure(unit, call.site, declared, call.method);
}

}  // namespace

ClassicResult cha_callgraph(const Unit& unit) {
  ClassicResult r{CallGraph(unit.fingerprint()), {}};
  for (const auto& call : unit.calls()) {
    const ClassId declared = receiver_class(unit, call);
    auto targets = cha_resolve(unit.classes(), declared, call.method);
    if (targets.empty()) r.diagnostics.push_back(unresolved(unit, call, declared));
    for (MethodId m : targets) r.callgraph.add(call.site, m);
  }
  std::sort(r.diagnostics.begin(), r.diagnostics.end());
  return r;
}

ClassSet instantiated_classes(const Unit& unit) {
  ClassSet out(unit.classes().size());
  for (const auto& a : unit.allocs()) out.insert(a.cls);
  return out;
}

ClassicResult rta_callgraph(const Unit& unit) {
  const auto& ct = unit.classes();
  const ClassSet inst = instantiated_classes(unit);
  ClassicResult r{CallGraph(unit.fingerprint()), {}};
  for (const auto& call : unit.calls()) {
    const ClassId declared = receiver_class(unit, call);
    (ct.descendants(declared) & inst).for_each([&](ClassId c) {
      if (auto m = ct.dispatch(c, call.method)) r.callgraph.add(call.site, *m);
    });
    if (cha_resolve(ct, declared, call.method).empty()) {
      r.diagnostics.push_back(unresolved(unit, call, declared));
    }
  }
  std::sort(r.diagnostics.begin(), r.diagnostics.end());
  return r;
}

std::optional<std::size_t> VtaGraph::field_node(ClassId declaring, FieldId f) const {
  auto it = std::lower_bound(fields_.begin(), fields_.end(), std::pair{declaring, f},
                             [](const auto& e, const auto& k) { return e.first < k; });
  if (it == fields_.end() || it->first != std::pair{declaring, f}) return std::nullopt;
  return it->second;
}

const ClassSet& VtaGraph::reach(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("unknown node " + std::string(name));
  return reach_[static_cast<std::size_t>(it - names_.begin())];
}

VtaGraph vta_propagate(const Unit& unit, const CallGraph& cg) {
  const auto& ct = unit.classes();
  const std::size_t nc = ct.size();
  const std::size_t nv = unit.vars().size();
  VtaGraph g;
  g.callgraph_ = CallGraph(unit.fingerprint());
  for (std::size_t v = 0; v < nv; ++v) g.names_.push_back(unit.var_name(make_id<VarIndex>(v)));
  for (std::size_t c = 0; c < nc; ++c) {
    for (const auto& fi : ct.fields(make_id<ClassId>(c))) {
      if (index(fi.declaring) != c) continue;
      const FieldId f = *unit.find_field(fi.name);
      g.fields_.push_back({{fi.declaring, f}, g.names_.size()});
      g.names_.push_back(ct.name(fi.declaring) + "." + fi.name);
    }
  }
  std::sort(g.fields_.begin(), g.fields_.end());

  const std::size_t n = g.names_.size();
  g.reach_.assign(n, ClassSet(nc));
  std::vector<ClassSet> pending(n, ClassSet(nc));
  std::vector<std::unordered_set<std::size_t>> succ(n);
  // Receiver to `this`: only the classes that dispatch to that method.
  std::vector<std::vector<std::pair<std::size_t, ClassSet>>> filtered(n);
  std::vector<bool> queued(n, false);
  std::deque<std::size_t> work;

  auto add = [&](std::size_t node, const ClassSet& cs) {
    ClassSet fresh = cs - g.reach_[node];
    if (fresh.empty()) return;
    g.reach_[node] |= fresh;
    pending[node] |= fresh;
    if (!queued[node]) {
      queued[node] = true;
      work.push_back(node);
    }
  };
  auto edge = [&](std::size_t from, std::size_t to) {
    if (from == to || !succ[from].insert(to).second) return;
    ++g.edges_;
    add(to, g.reach_[from]);
  };
  // Node of field f as seen through an object of class c.
  auto field_of = [&](ClassId c, FieldId f) -> std::optional<std::size_t> {
    const FieldInfo* fi = ct.field(c, unit.field_name(f));
    if (!fi) return std::nullopt;
    return g.field_node(fi->declaring, f);
  };

  std::vector<std::vector<const ir::Load*>> loads(nv);
  std::vector<std::vector<const ir::Store*>> stores(nv);
  for (const auto& l : unit.loads()) loads[index(l.base)].push_back(&l);
  for (const auto& s : unit.stores()) stores[index(s.base)].push_back(&s);

  for (const auto& a : unit.allocs()) add(index(a.target), ClassSet::single(nc, a.cls));
  for (const auto& c : unit.copies()) edge(index(c.source), index(c.target));
  for (std::size_t m = 0; m < ct.method_count(); ++m) {
    const auto& mv = unit.method_vars(make_id<MethodId>(m));
    edge(index(mv.return_var), index(mv.return_slot));
  }
  for (const auto& call : unit.calls()) {
    for (MethodId t : cg.targets(call.site)) {
      const auto& mv = unit.method_vars(t);
      edge(index(call.arg), index(mv.param));
      ClassSet dispatching(nc);
      for (std::size_t c = 0; c < nc; ++c) {
        if (ct.dispatch(make_id<ClassId>(c), call.method) == t) dispatching.insert(make_id<ClassId>(c));
      }
      filtered[index(call.receiver)].emplace_back(index(mv.this_var), dispatching);
      ++g.edges_;
      add(index(mv.this_var), g.reach_[index(call.receiver)] & dispatching);
      edge(index(mv.return_slot), index(call.target));
    }
  }

  while (!work.empty()) {
    const std::size_t node = work.front();
    work.pop_front();
    queued[node] = false;
    ClassSet delta = pending[node];
    pending[node] = ClassSet(nc);
    if (node < nv) {
      delta.for_each([&](ClassId c) {
        for (const auto* l : loads[node]) {
          if (auto fn = field_of(c, l->field)) edge(*fn, index(l->target));
        }
        for (const auto* s : stores[node]) {
          if (auto fn = field_of(c, s->field)) edge(index(s->source), *fn);
        }
      });
    }
    std::vector<std::size_t> out(succ[node].begin(), succ[node].end());
    for (std::size_t s : out) add(s, delta);
    for (const auto& [to, only] : filtered[node]) add(to, delta & only);
  }

  for (const auto& call : unit.calls()) {
    g.reach_[index(call.receiver)].for_each([&](ClassId c) {
      if (auto m = ct.dispatch(c, call.method)) g.callgraph_.add(call.site, *m);
    });
  }
  return g;
}

}  // namespace tfa
