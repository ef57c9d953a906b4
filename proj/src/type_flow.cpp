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

#include "tfa/type_flow.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace tfa {

RelationStore::RelationStore(std::size_t vars, std::size_t classes)
    : classes_(classes),
      types_(vars, ClassSet(classes)),
      up_(vars),
      down_(vars),
      field_out_(vars) {}

ClassSet RelationStore::add_order(VarIndex lower, VarIndex upper, const ClassSet& label) {
  if (lower == upper || label.empty()) return ClassSet(classes_);
  auto [it, fresh] = up_[index(lower)].try_emplace(index(upper), ClassSet(classes_));
  ClassSet added = label - it->second;
  if (added.empty()) return added;
  it->second |= added;
  auto [dit, dfresh] = down_[index(upper)].try_emplace(index(lower), ClassSet(classes_));
  dit->second |= added;
  return added;
}

ClassSet RelationStore::order_label(VarIndex lower, VarIndex upper) const {
  if (lower == upper) return ClassSet::all(classes_);
  const auto& up = up_[index(lower)];
  auto it = up.find(index(upper));
  return it == up.end() ? ClassSet(classes_) : it->second;
}

bool RelationStore::ordered(VarIndex lower, VarIndex upper) const {
  if (lower == upper) return true;
  const auto& up = up_[index(lower)];
  auto it = up.find(index(upper));
  return it != up.end() && it->second.full();
}

bool RelationStore::add_field(VarIndex base, FieldId f, VarIndex target) {
  if (!fields_.insert(key(base, f, target)).second) return false;
  field_out_[index(base)].emplace_back(f, target);
  return true;
}

std::size_t RelationStore::typeflow_size() const {
  std::size_t n = 0;
  for (const auto& t : types_) n += t.size();
  return n;
}

std::size_t RelationStore::order_size() const {
  std::size_t n = 0;
  for (const auto& up : up_) {
    for (const auto& [_, label] : up) n += label.full() ? 1 : 0;
  }
  return n;
}

std::size_t RelationStore::restricted_order_size() const {
  std::size_t n = 0;
  for (const auto& up : up_) n += up.size();
  return n - order_size();
}

std::vector<std::pair<ClassId, VarIndex>> RelationStore::typeflow_tuples() const {
  std::vector<std::pair<ClassId, VarIndex>> out;
  for (std::size_t v = 0; v < types_.size(); ++v) {
    types_[v].for_each([&](ClassId c) { out.emplace_back(c, make_id<VarIndex>(v)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelationStore::OrderTuple> RelationStore::order_tuples() const {
  std::vector<OrderTuple> out;
  for (std::size_t v = 0; v < up_.size(); ++v) {
    for (const auto& [u, label] : up_[v]) {
      out.push_back({make_id<VarIndex>(v), make_id<VarIndex>(u), label});
    }
  }
  std::sort(out.begin(), out.end(), [](const OrderTuple& a, const OrderTuple& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  return out;
}

std::vector<RelationStore::FieldTuple> RelationStore::field_tuples() const {
  std::vector<FieldTuple> out;
  for (std::size_t v = 0; v < field_out_.size(); ++v) {
    for (const auto& [f, t] : field_out_[v]) out.emplace_back(make_id<VarIndex>(v), f, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const RelationStore& a, const RelationStore& b) {
  return a.classes_ == b.classes_ && a.types_ == b.types_ &&
         a.order_tuples() == b.order_tuples() && a.field_tuples() == b.field_tuples();
}

namespace {

RelationStore seed_flow(const Unit& unit) {
  const std::size_t nc = unit.classes().size();
  RelationStore s(unit.vars().size(), nc);
  const ClassSet every = ClassSet::all(nc);
  for (const auto& a : unit.allocs()) s.add_type(a.cls, a.target);
  for (const auto& c : unit.copies()) s.add_order(c.source, c.target, every);
  return s;
}

}  // namespace

RelationStore seed_base_relations(const Unit& unit) {
  RelationStore s = seed_flow(unit);
  for (const auto& st : unit.stores()) s.add_field(st.base, st.field, st.source);
  return s;
}

namespace {

struct TypeFact {
  ClassId cls;
  VarIndex var;
};
struct OrderFact {
  VarIndex lower;
  VarIndex upper;
  ClassSet added;
};
struct FieldFact {
  VarIndex base;
  FieldId field;
  VarIndex target;
};
using Fact = std::variant<TypeFact, OrderFact, FieldFact>;

class Solver {
 public:
  Solver(const Unit& unit, TfaResult& out)
      : unit_(unit),
        out_(out),
        every_(ClassSet::all(unit.classes().size())),
        stores_by_base_(unit.vars().size()),
        loads_by_base_(unit.vars().size()),
        calls_by_receiver_(unit.vars().size()) {
    for (const auto& s : unit.stores()) stores_by_base_[index(s.base)].emplace_back(s.field, s.source);
    for (const auto& l : unit.loads()) loads_by_base_[index(l.base)].emplace_back(l.field, l.target);
    for (std::size_t i = 0; i < unit.calls().size(); ++i) {
      calls_by_receiver_[index(unit.calls()[i].receiver)].push_back(i);
    }
  }

  void seed(const RelationStore& facts) {
    for (const auto& [c, v] : facts.typeflow_tuples()) type(c, v);
    for (const auto& t : facts.order_tuples()) order(t.lower, t.upper, t.label);
    for (const auto& [b, f, t] : facts.field_tuples()) field(b, f, t);
    for (std::size_t m = 0; m < unit_.classes().method_count(); ++m) {
      const auto& mv = unit_.method_vars(make_id<MethodId>(m));
      order(mv.return_var, mv.return_slot, every_);
    }
  }

  void run() {
    while (!work_.empty()) {
      Fact fact = std::move(work_.front());
      work_.pop_front();
      ++out_.iterations;
      std::visit([this](const auto& f) { process(f); }, fact);
      flush();
    }
  }

  std::set<Diagnostic> diagnostics;

 private:
  RelationStore& store() { return out_.store; }

  void type(ClassId c, VarIndex v) {
    if (store().add_type(c, v)) work_.push_back(TypeFact{c, v});
  }
  void order(VarIndex lower, VarIndex upper, const ClassSet& label) {
    ClassSet added = store().add_order(lower, upper, label);
    if (!added.empty()) work_.push_back(OrderFact{lower, upper, std::move(added)});
  }
  void field(VarIndex base, FieldId f, VarIndex target) {
    if (store().add_field(base, f, target)) work_.push_back(FieldFact{base, f, target});
  }

  // Derivations are buffered while the neighbour maps are being iterated.
  void flush() {
    for (const auto& [c, v] : pending_types_) type(c, v);
    for (const auto& o : pending_orders_) order(o.lower, o.upper, o.added);
    for (const auto& f : pending_fields_) field(f.base, f.field, f.target);
    pending_types_.clear();
    pending_orders_.clear();
    pending_fields_.clear();
  }

  void derive_stores(VarIndex store_base, VarIndex target) {
    for (const auto& [f, z] : stores_by_base_[index(store_base)]) {
      pending_fields_.push_back({target, f, z});
    }
  }

  void process(const TypeFact& fact) {
    const auto& s = store();
    for (const auto& [x, label] : s.uppers(fact.var)) {
      if (label.contains(fact.cls)) pending_types_.emplace_back(fact.cls, make_id<VarIndex>(x));
    }

    for (std::size_t ci : calls_by_receiver_[index(fact.var)]) {
      const auto& call = unit_.calls()[ci];
      auto target = unit_.classes().dispatch(fact.cls, call.method);
      if (!target) {
        diagnostics.insert(dispatch_failure(unit_, call.site, fact.cls, call.method));
        continue;
      }
      out_.callgraph.add(call.site, *target);
      const auto& mv = unit_.method_vars(*target);
      pending_orders_.push_back({call.arg, mv.param, every_});
      pending_orders_.push_back(
          {fact.var, mv.this_var, ClassSet::single(every_.universe(), fact.cls)});
      pending_orders_.push_back({mv.return_slot, call.target, every_});
    }

    // The variable as a witness carrying this class: everything it reaches
    // under a label containing the class shares an object of that class.
    std::vector<VarIndex> reached{fact.var};
    for (const auto& [x, label] : s.uppers(fact.var)) {
      if (label.contains(fact.cls)) reached.push_back(make_id<VarIndex>(x));
    }
    for (VarIndex sb : reached) {
      if (stores_by_base_[index(sb)].empty()) continue;
      for (VarIndex t : reached) derive_stores(sb, t);
    }
  }

  void process(const OrderFact& fact) {
    const auto& s = store();
    for (const auto& [p, label] : s.lowers(fact.lower)) {
      pending_orders_.push_back({make_id<VarIndex>(p), fact.upper, label & fact.added});
    }
    for (const auto& [q, label] : s.uppers(fact.upper)) {
      pending_orders_.push_back({fact.lower, make_id<VarIndex>(q), fact.added & label});
    }

    const ClassSet carried = s.types(fact.lower) & fact.added;
    if (carried.empty()) return;
    carried.for_each([&](ClassId c) { pending_types_.emplace_back(c, fact.upper); });

    // Witness fact.lower, classes `carried`, one path being the new pair.
    const bool upper_stores = !stores_by_base_[index(fact.upper)].empty();
    if (upper_stores) {
      derive_stores(fact.upper, fact.lower);
      derive_stores(fact.upper, fact.upper);
    }
    if (!stores_by_base_[index(fact.lower)].empty()) derive_stores(fact.lower, fact.upper);
    for (const auto& [x, label] : s.uppers(fact.lower)) {
      const VarIndex other = make_id<VarIndex>(x);
      if (other == fact.upper || !label.intersects(carried)) continue;
      if (upper_stores) derive_stores(fact.upper, other);
      if (!stores_by_base_[index(other)].empty()) derive_stores(other, fact.upper);
    }
  }

  void process(const FieldFact& fact) {
    for (const auto& [f, target] : loads_by_base_[index(fact.base)]) {
      if (f == fact.field) pending_orders_.push_back({fact.target, target, every_});
    }
  }

  const Unit& unit_;
  TfaResult& out_;
  ClassSet every_;
  std::vector<std::vector<std::pair<FieldId, VarIndex>>> stores_by_base_;
  std::vector<std::vector<std::pair<FieldId, VarIndex>>> loads_by_base_;
  std::vector<std::vector<std::size_t>> calls_by_receiver_;
  std::deque<Fact> work_;
  std::vector<std::pair<ClassId, VarIndex>> pending_types_;
  std::vector<OrderFact> pending_orders_;
  std::vector<FieldFact> pending_fields_;
};

}  // namespace

TfaResult tfa_fixpoint(const Unit& unit, const RelationStore& start) {
  TfaResult r;
  r.fingerprint = unit.fingerprint();
  r.base = seed_base_relations(unit);
  r.store = RelationStore(unit.vars().size(), unit.classes().size());
  r.callgraph = CallGraph(unit.fingerprint());
  Solver solver(unit, r);
  solver.seed(start);
  solver.run();
  r.diagnostics.assign(solver.diagnostics.begin(), solver.diagnostics.end());
  return r;
}

// Store facts enter the fixpoint only through rule 4, so a store through a
// variable that never holds a value contributes no field access.
TfaResult tfa_fixpoint(const Unit& unit) { return tfa_fixpoint(unit, seed_flow(unit)); }

const ClassSet& reaching_types(const TfaResult& result, VarIndex v) {
  if (index(v) >= result.store.var_count()) {
    throw std::out_of_range("unknown variable index " + std::to_string(index(v)));
  }
  return result.store.types(v);
}

std::string dump_relations(const Unit& unit, const RelationStore& store) {
  const auto& ct = unit.classes();
  std::ostringstream os;
  for (const auto& [c, v] : store.typeflow_tuples()) {
    os << "TF\t" << ct.name(c) << '\t' << unit.var_name(v) << '\n';
  }
  for (const auto& t : store.order_tuples()) {
    if (t.label.full()) {
      os << "ORD\t" << unit.var_name(t.lower) << '\t' << unit.var_name(t.upper) << '\n';
    } else {
      t.label.for_each([&](ClassId c) {
        os << "ORDC\t" << unit.var_name(t.lower) << '\t' << unit.var_name(t.upper) << '\t'
           << ct.name(c) << '\n';
      });
    }
  }
  for (const auto& [b, f, t] : store.field_tuples()) {
    os << "FLD\t" << unit.var_name(b) << '\t' << unit.field_name(f) << '\t'
       << unit.var_name(t) << '\n';
  }
  return os.str();
}

}  // namespace tfa
