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

#include "tfa/diff.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "tfa/minimize.hpp"

namespace tfa {

EquivalenceReport check_theorem1(const TfaResult& tfa, const PtaResult& pta) {
  if (tfa.fingerprint != pta.fingerprint || tfa.store.var_count() != pta.env.size()) {
    throw std::invalid_argument("results belong to different programs");
  }
  EquivalenceReport rep;
  rep.typeflow_size = tfa.store.typeflow_size();
  for (const auto& p : pta.env) rep.points_to_size += p.count();
  rep.tfa_edges = tfa.callgraph.size();
  rep.pta_edges = pta.callgraph.size();
  for (std::size_t i = 0; i < pta.env.size(); ++i) {
    const VarIndex v = make_id<VarIndex>(i);
    const ClassSet& left = reaching_types(tfa, v);
    const ClassSet right = class_projection(pta, v);
    if (left != right) rep.mismatches.push_back({v, left - right, right - left});
  }
  rep.ok = rep.mismatches.empty() && tfa.callgraph == pta.callgraph;
  return rep;
}

std::string render_report(const Unit& unit, const EquivalenceReport& report) {
  const auto& ct = unit.classes();
  auto names = [&](const ClassSet& s) {
    std::string out = "{";
    s.for_each([&](ClassId c) { out += (out.size() > 1 ? "," : "") + ct.name(c); });
    return out + "}";
  };
  std::ostringstream os;
  os << (report.ok ? "EQUIVALENT" : "MISMATCH") << "\ttypeflow=" << report.typeflow_size
     << "\tpoints_to=" << report.points_to_size << "\ttfa_edges=" << report.tfa_edges
     << "\tpta_edges=" << report.pta_edges << '\n';
  for (const auto& m : report.mismatches) {
    os << "VAR\t" << unit.var_name(m.var) << "\ttfa_only=" << names(m.tfa_only)
       << "\tpta_only=" << names(m.pta_only) << '\n';
  }
  return os.str();
}

CallGraphDiff compare_callgraphs(const CallGraph& a, const CallGraph& b) {
  if (a.fingerprint() != b.fingerprint()) {
    throw std::invalid_argument("call graphs belong to different programs");
  }
  CallGraphDiff d;
  const auto& x = a.edges();
  const auto& y = b.edges();
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(d.only_a));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(d.only_b));
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(d.shared));
  return d;
}

namespace {

template <class F>
auto timed(double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto out = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
           .count();
  return out;
}

}  // namespace

AnalysisSuite run_all(const Unit& unit) {
  AnalysisSuite s;
  s.cha = timed(s.t_cha_ms, [&] { return cha_callgraph(unit); });
  s.rta = rta_callgraph(unit);
  s.vta = vta_propagate(unit, s.cha.callgraph);
  s.tfa = timed(s.t_tfa_ms, [&] { return tfa_fixpoint(unit); });
  s.pta = timed(s.t_pta_ms, [&] { return pta_fixpoint(unit); });
  return s;
}

StatsRow collect_stats(const std::string& name, const Unit& unit, const AnalysisSuite& suite,
                       bool timings) {
  StatsRow row;
  row.name = name;
  const auto& base = suite.tfa.base;
  row.r_tf = base.typeflow_size();
  row.r_ord = base.order_size();
  row.r_fld = base.field_size();
  row.cs_cha = suite.cha.callgraph.size();
  row.cs_rta = suite.rta.callgraph.size();
  row.cs_vta = suite.vta.callgraph().size();
  row.cs_tfa = suite.tfa.callgraph.size();
  row.cs_pta = suite.pta.callgraph.size();
  if (timings) {
    row.t_cha_ms = suite.t_cha_ms;
    row.t_tfa_ms = suite.t_tfa_ms;
    row.t_pta_ms = suite.t_pta_ms;
  }
  row.cs_base = unit.call_site_count();
  const auto& fix = suite.tfa.store;
  row.rs_tf = fix.typeflow_size();
  row.rs_ord = fix.order_size();
  row.rs_fld = fix.field_size();
  const Partition p = bisim_minimize(suite.tfa);
  row.nodes = p.var_count();
  row.nodes_min = p.size();
  row.reduce = reduction_ratio(p);
  return row;
}

void write_stats_header(std::ostream& os) {
  os << "name,r_tf,r_ord,r_fld,cs_cha,cs_rta,cs_vta,cs_tfa,cs_pta,t_cha_ms,t_tfa_ms,t_pta_ms,"
        "cs_base,rs_tf,rs_ord,rs_fld,nodes,nodes_min,reduce\n";
}

void write_stats_row(std::ostream& os, const StatsRow& r) {
  auto ms = [](const std::optional<double>& t) {
    if (!t) return std::string();
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << *t;
    return s.str();
  };
  std::ostringstream reduce;
  reduce << std::fixed << std::setprecision(4) << r.reduce;
  os << r.name << ',' << r.r_tf << ',' << r.r_ord << ',' << r.r_fld << ',' << r.cs_cha << ','
     << r.cs_rta << ',' << r.cs_vta << ',' << r.cs_tfa << ',' << r.cs_pta << ','
     << ms(r.t_cha_ms) << ',' << ms(r.t_tfa_ms) << ',' << ms(r.t_pta_ms) << ',' << r.cs_base
     << ',' << r.rs_tf << ',' << r.rs_ord << ',' << r.rs_fld << ',' << r.nodes << ','
     << r.nodes_min << ',' << reduce.str() << '\n';
}

namespace {

std::vector<std::vector<Stmt>*> bodies(Program& p) {
  std::vector<std::vector<Stmt>*> out;
  for (auto& c : p.classes) {
    for (auto& m : c.methods) out.push_back(&m.body);
  }
  out.push_back(&p.entry_body);
  return out;
}

bool fails(const Program& p, const std::function<bool(const Unit&)>& still_failing) {
  try {
    return still_failing(make_unit(p));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Program minimize_witness(Program program,
                         const std::function<bool(const Unit&)>& still_failing) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t b = 0; b < bodies(program).size(); ++b) {
      for (std::size_t i = 0; i < bodies(program)[b]->size();) {
        Program trial = program;
        auto* body = bodies(trial)[b];
        body->erase(body->begin() + static_cast<std::ptrdiff_t>(i));
        if (fails(trial, still_failing)) {
          program = std::move(trial);
          shrunk = true;
        } else {
          ++i;
        }
      }
    }
  }
  return program;
}

}  // namespace tfa
