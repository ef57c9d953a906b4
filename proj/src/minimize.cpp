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

#include "tfa/minimize.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

namespace tfa {

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  // Renumber blocks by first occurrence, which is the smallest member.
  std::map<std::size_t, std::size_t> renumber;
  Partition p;
  p.block_of.resize(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = renumber.try_emplace(labels[v], p.blocks.size());
    if (fresh) {
      p.blocks.emplace_back();
      p.representatives.push_back(make_id<VarIndex>(v));
    }
    p.block_of[v] = it->second;
    p.blocks[it->second].push_back(make_id<VarIndex>(v));
  }
  return p;
}

Partition Partition::discrete(std::size_t vars) {
  std::vector<std::size_t> labels(vars);
  for (std::size_t v = 0; v < vars; ++v) labels[v] = v;
  return from_labels(labels);
}

Partition alias_scc(const TfaResult& r) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  const std::size_t n = r.store.var_count();
  Graph g(n);
  for (const auto& t : r.store.order_tuples()) {
    if (t.label.full()) boost::add_edge(index(t.lower), index(t.upper), g);
  }
  std::vector<std::size_t> component(n);
  if (n > 0) boost::strong_components(g, component.data());
  return Partition::from_labels(component);
}

Partition bisim_minimize(const TfaResult& r) {
  const auto& s = r.store;
  const std::size_t n = s.var_count();

  std::vector<std::size_t> block(n);
  {
    std::map<ClassSet, std::size_t> by_types;
    for (std::size_t v = 0; v < n; ++v) {
      block[v] = by_types.try_emplace(s.types(make_id<VarIndex>(v)), by_types.size())
                     .first->second;
    }
  }

  std::vector<std::vector<std::pair<FieldId, std::size_t>>> succ(n);
  for (const auto& [b, f, t] : s.field_tuples()) succ[index(b)].emplace_back(f, index(t));

  std::size_t count = Partition::from_labels(block).size();
  for (;;) {
    // Split every block on the set of (field, successor block) transitions.
    using Signature = std::pair<std::size_t, std::vector<std::pair<FieldId, std::size_t>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      Signature sig{block[v], {}};
      for (const auto& [f, t] : succ[v]) sig.second.emplace_back(f, block[t]);
      std::sort(sig.second.begin(), sig.second.end());
      sig.second.erase(std::unique(sig.second.begin(), sig.second.end()), sig.second.end());
      next[v] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    block = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return Partition::from_labels(block);
}

namespace {

RelationStore rekey(const RelationStore& s, const Partition& p, std::size_t classes) {
  RelationStore out(p.size(), classes);
  for (const auto& [c, v] : s.typeflow_tuples()) {
    out.add_type(c, make_id<VarIndex>(p.block_of[index(v)]));
  }
  for (const auto& t : s.order_tuples()) {
    out.add_order(make_id<VarIndex>(p.block_of[index(t.lower)]),
                  make_id<VarIndex>(p.block_of[index(t.upper)]), t.label);
  }
  for (const auto& [b, f, t] : s.field_tuples()) {
    out.add_field(make_id<VarIndex>(p.block_of[index(b)]), f,
                  make_id<VarIndex>(p.block_of[index(t)]));
  }
  return out;
}

}  // namespace

QuotientResult quotient(const TfaResult& r, const Partition& p) {
  if (p.var_count() != r.store.var_count()) {
    throw std::invalid_argument("partition does not cover the result's variables");
  }
  const Partition bisim = bisim_minimize(r);
  for (const auto& members : p.blocks) {
    const VarIndex rep = members.front();
    for (VarIndex v : members) {
      if (bisim.block_of[index(v)] != bisim.block_of[index(rep)]) {
        throw QuotientError(rep, v,
                            "variables " + std::to_string(index(rep)) + " and " +
                                std::to_string(index(v)) + " share a block but are not bisimilar");
      }
    }
  }
  QuotientResult q;
  q.partition = p;
  const std::size_t nc = r.store.class_count();
  q.result.base = rekey(r.base, p, nc);
  q.result.store = rekey(r.store, p, nc);
  q.result.callgraph = r.callgraph;
  q.result.iterations = r.iterations;
  q.result.diagnostics = r.diagnostics;
  q.result.fingerprint = r.fingerprint;
  return q;
}

bool check_refinement(const Partition& finer, const Partition& coarser) {
  if (finer.var_count() != coarser.var_count()) {
    throw std::invalid_argument("partitions over different variable sets");
  }
  for (const auto& members : finer.blocks) {
    const std::size_t home = coarser.block_of[index(members.front())];
    for (VarIndex v : members) {
      if (coarser.block_of[index(v)] != home) return false;
    }
  }
  return true;
}

double reduction_ratio(const Partition& p) {
  if (p.var_count() == 0) return 0.0;
  return 1.0 - static_cast<double>(p.size()) / static_cast<double>(p.var_count());
}

std::string dump_partition(const Unit& unit, const Partition& p) {
  std::string out;
  for (const auto& members : p.blocks) {
    out += "BLOCK\t" + unit.var_name(members.front());
    for (VarIndex v : members) out += '\t' + unit.var_name(v);
    out += '\n';
  }
  return out;
}

}  // namespace tfa
