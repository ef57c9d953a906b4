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

#include "tfa/points_to.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace tfa {

ObjectSet PtaResult::cell(std::size_t o, FieldId f) const {
  auto it = heap.find({o, f});
  return it == heap.end() ? ObjectSet(sites.size()) : it->second;
}

namespace {

// Nodes are the variables followed by one heap cell per (object, field).
class Solver {
 public:
  explicit Solver(const Unit& unit)
      : unit_(unit),
        vars_(unit.vars().size()),
        objects_(unit.allocs().size()),
        fields_(unit.field_count()),
        nodes_(vars_ + objects_ * fields_),
        pts_(nodes_, ObjectSet(objects_)),
        pending_(nodes_, ObjectSet(objects_)),
        queued_(nodes_, false),
        succ_(nodes_),
        loads_(vars_),
        stores_(vars_),
        calls_(vars_) {
    for (const auto& l : unit.loads()) loads_[index(l.base)].push_back(&l);
    for (const auto& s : unit.stores()) stores_[index(s.base)].push_back(&s);
    for (const auto& c : unit.calls()) calls_[index(c.receiver)].push_back(&c);
  }

  void run(PtaResult& out) {
    out.callgraph = CallGraph(unit_.fingerprint());
    for (std::size_t i = 0; i < objects_; ++i) {
      const auto& a = unit_.allocs()[i];
      out.sites.push_back({a.site, a.cls});
      ObjectSet one(objects_);
      one.set(i);
      add(index(a.target), one);
    }
    for (const auto& c : unit_.copies()) edge(index(c.source), index(c.target));
    for (std::size_t m = 0; m < unit_.classes().method_count(); ++m) {
      const auto& mv = unit_.method_vars(make_id<MethodId>(m));
      edge(index(mv.return_var), index(mv.return_slot));
    }

    while (!work_.empty()) {
      const std::size_t n = work_.front();
      work_.pop_front();
      queued_[n] = false;
      ++out.iterations;
      ObjectSet delta(objects_);
      delta.swap(pending_[n]);
      if (n < vars_) constraints(n, delta, out);
      for (std::size_t s : succ_[n]) add(s, delta);
    }

    out.env.assign(pts_.begin(), pts_.begin() + static_cast<std::ptrdiff_t>(vars_));
    for (std::size_t o = 0; o < objects_; ++o) {
      for (std::size_t f = 0; f < fields_; ++f) {
        const auto& p = pts_[cell(o, f)];
        if (p.any()) out.heap.emplace(std::pair{o, make_id<FieldId>(f)}, p);
      }
    }
    out.diagnostics.assign(diagnostics_.begin(), diagnostics_.end());
  }

 private:
  std::size_t cell(std::size_t o, std::size_t f) const { return vars_ + o * fields_ + f; }

  void add(std::size_t n, const ObjectSet& objs) {
    ObjectSet fresh = objs - pts_[n];
    if (fresh.none()) return;
    pts_[n] |= fresh;
    pending_[n] |= fresh;
    if (!queued_[n]) {
      queued_[n] = true;
      work_.push_back(n);
    }
  }

  void edge(std::size_t from, std::size_t to) {
    if (from == to || !succ_[from].insert(to).second) return;
    add(to, pts_[from]);
  }

  void constraints(std::size_t v, const ObjectSet& delta, PtaResult& out) {
    for (auto o = delta.find_first(); o != ObjectSet::npos; o = delta.find_next(o)) {
      for (const auto* l : loads_[v]) edge(cell(o, index(l->field)), index(l->target));
      for (const auto* s : stores_[v]) edge(index(s->source), cell(o, index(s->field)));
      const ClassId cls = unit_.allocs()[o].cls;
      for (const auto* c : calls_[v]) {
        auto target = unit_.classes().dispatch(cls, c->method);
        if (!target) {
          diagnostics_.insert(dispatch_failure(unit_, c->site, cls, c->method));
          continue;
        }
        out.callgraph.add(c->site, *target);
        const auto& mv = unit_.method_vars(*target);
        edge(index(c->arg), index(mv.param));
        ObjectSet one(objects_);
        one.set(o);
        add(index(mv.this_var), one);
        edge(index(mv.return_slot), index(c->target));
      }
    }
  }

  const Unit& unit_;
  std::size_t vars_, objects_, fields_, nodes_;
  std::vector<ObjectSet> pts_;
  std::vector<ObjectSet> pending_;
  std::vector<bool> queued_;
  std::vector<std::unordered_set<std::size_t>> succ_;
  std::vector<std::vector<const ir::Load*>> loads_;
  std::vector<std::vector<const ir::Store*>> stores_;
  std::vector<std::vector<const ir::Call*>> calls_;
  std::deque<std::size_t> work_;
  std::set<Diagnostic> diagnostics_;
};

}  // namespace

PtaResult pta_fixpoint(const Unit& unit) {
  PtaResult r;
  r.fingerprint = unit.fingerprint();
  r.class_count = unit.classes().size();
  Solver(unit).run(r);
  return r;
}

ClassSet class_projection(const PtaResult& result, VarIndex v) {
  if (index(v) >= result.env.size()) {
    throw std::out_of_range("unknown variable index " + std::to_string(index(v)));
  }
  ClassSet out(result.class_count);
  const auto& p = result.env[index(v)];
  for (auto o = p.find_first(); o != ObjectSet::npos; o = p.find_next(o)) {
    out.insert(result.sites[o].cls);
  }
  return out;
}

std::string dump_points_to(const Unit& unit, const PtaResult& result) {
  const auto& ct = unit.classes();
  auto obj = [&](std::size_t o) { return unit.site_name(result.sites[o].site); };
  std::vector<std::string> lines;
  for (std::size_t v = 0; v < result.env.size(); ++v) {
    const auto& p = result.env[v];
    for (auto o = p.find_first(); o != ObjectSet::npos; o = p.find_next(o)) {
      lines.push_back("PTS\t" + unit.var_name(make_id<VarIndex>(v)) + '\t' + obj(o) + ':' +
                      ct.name(result.sites[o].cls));
    }
  }
  for (const auto& [key, p] : result.heap) {
    for (auto o = p.find_first(); o != ObjectSet::npos; o = p.find_next(o)) {
      lines.push_back("HEAP\t" + obj(key.first) + '.' + unit.field_name(key.second) + '\t' +
                      obj(o));
    }
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

}  // namespace tfa
