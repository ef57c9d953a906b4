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

// Differential checks between analyses, and per-program statistics.

#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tfa/callgraph.hpp"
#include "tfa/classic.hpp"
#include "tfa/points_to.hpp"
#include "tfa/type_flow.hpp"
#include "tfa/unit.hpp"

namespace tfa {

struct Mismatch {
  VarIndex var;
  ClassSet tfa_only;
  ClassSet pta_only;
};

struct EquivalenceReport {
  bool ok = true;
  std::vector<Mismatch> mismatches;
  std::size_t typeflow_size = 0;  // |⇢*|
  std::size_t points_to_size = 0;  // Σ |Ω(v)|
  std::size_t tfa_edges = 0;
  std::size_t pta_edges = 0;
};

/// Reaching types against the class projection of points-to sets, per
/// variable. Throws std::invalid_argument for results of different programs.
EquivalenceReport check_theorem1(const TfaResult& tfa, const PtaResult& pta);

std::string render_report(const Unit& unit, const EquivalenceReport& report);

struct CallGraphDiff {
  std::vector<CallEdge> only_a;
  std::vector<CallEdge> only_b;
  std::vector<CallEdge> shared;
};

/// Throws std::invalid_argument when the graphs belong to different programs.
CallGraphDiff compare_callgraphs(const CallGraph& a, const CallGraph& b);

/// Every analysis on one program.
struct AnalysisSuite {
  ClassicResult cha;
  ClassicResult rta;
  VtaGraph vta;
  TfaResult tfa;
  PtaResult pta;
  double t_cha_ms = 0, t_tfa_ms = 0, t_pta_ms = 0;
};

AnalysisSuite run_all(const Unit& unit);

struct StatsRow {
  std::string name;
  std::size_t r_tf = 0, r_ord = 0, r_fld = 0;  // base relations
  std::size_t cs_cha = 0, cs_rta = 0, cs_vta = 0, cs_tfa = 0, cs_pta = 0;
  std::optional<double> t_cha_ms, t_tfa_ms, t_pta_ms;
  std::size_t cs_base = 0;                        // syntactic call sites
  std::size_t rs_tf = 0, rs_ord = 0, rs_fld = 0;  // fixpoint relations
  std::size_t nodes = 0, nodes_min = 0;           // variables, ≈ blocks
  double reduce = 0;
};

/// Timings are filled in only when `timings` is set; they vary run to run.
StatsRow collect_stats(const std::string& name, const Unit& unit, const AnalysisSuite& suite,
                       bool timings = false);

void write_stats_header(std::ostream& os);
void write_stats_row(std::ostream& os, const StatsRow& row);

/// Greedy delta debugging: drops statements one at a time while
/// `still_failing` keeps holding. Returns the smallest program found.
Program minimize_witness(Program program, const std::function<bool(const Unit&)>& still_failing);

}  // namespace tfa
