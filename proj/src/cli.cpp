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

#include "tfa/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfa/classic.hpp"
#include "tfa/diff.hpp"
#include "tfa/generator.hpp"
#include "tfa/minimize.hpp"
#include "tfa/parser.hpp"

namespace tfa::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Failure to read or validate an input; maps to kInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Unit load(const fs::path& path) {
  try {
    return load_unit(read_file(path));
  } catch (const FrontendError& e) {
    throw InputError(path.string() + ":" + e.what());
  }
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".tfl") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Writes to --out when given, standard output otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError(path + ": cannot write");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

const std::vector<std::string> kAnalyses{"cha", "rta", "vta", "tfa", "pta"};

std::string method_node(const Unit& unit, MethodId m) {
  return unit.classes().qualified_name(m);
}

std::string scope_node(const Unit& unit, SiteId site) {
  auto m = unit.scope_method(site.scope);
  return m ? method_node(unit, *m) : "main";
}

const CallGraph& graph_of(const AnalysisSuite& s, const std::string& a) {
  if (a == "cha") return s.cha.callgraph;
  if (a == "rta") return s.rta.callgraph;
  if (a == "vta") return s.vta.callgraph();
  if (a == "tfa") return s.tfa.callgraph;
  return s.pta.callgraph;
}

std::vector<std::string> vta_lines(const Unit& unit, const VtaGraph& g) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    g.node_reach(n).for_each([&](ClassId c) {
      out.push_back("REACH\t" + g.node_name(n) + '\t' + unit.classes().name(c));
    });
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> relation_lines(const Unit& unit, const AnalysisSuite& s,
                                        const std::string& a) {
  if (a == "tfa") return split_lines(dump_relations(unit, s.tfa.store));
  if (a == "pta") return split_lines(dump_points_to(unit, s.pta));
  if (a == "vta") return vta_lines(unit, s.vta);
  return {};
}

void emit_dot(std::ostream& os, const Unit& unit, const AnalysisSuite& s,
              const std::vector<std::string>& selected) {
  for (const auto& a : selected) {
    os << "digraph \"" << a << "\" {\n  node [shape=box];\n";
    for (std::size_t m = 0; m < unit.classes().method_count(); ++m) {
      os << "  \"" << method_node(unit, make_id<MethodId>(m)) << "\";\n";
    }
    os << "  \"main\";\n";
    for (const auto& e : graph_of(s, a).edges()) {
      os << "  \"" << scope_node(unit, e.site) << "\" -> \"" << method_node(unit, e.target)
         << "\" [label=\"" << unit.site_name(e.site) << "\"];\n";
    }
    os << "}\n";
  }
}

void emit_tsv(std::ostream& os, const Unit& unit, const AnalysisSuite& s,
              const std::vector<std::string>& selected) {
  for (const auto& a : selected) {
    const auto& g = graph_of(s, a);
    os << "STAT\t" << a << "\tedges\t" << g.size() << '\n';
    for (const auto& e : g.edges()) {
      os << "EDGE\t" << a << '\t' << unit.site_name(e.site) << '\t'
         << method_node(unit, e.target) << '\n';
    }
    for (const auto& line : relation_lines(unit, s, a)) os << line << '\n';
  }
}

void emit_json(std::ostream& os, const Unit& unit, const AnalysisSuite& s,
               const std::vector<std::string>& selected) {
  json doc = json::object();
  for (const auto& a : selected) {
    json edges = json::array();
    for (const auto& e : graph_of(s, a).edges()) {
      edges.push_back({{"site", unit.site_name(e.site)}, {"target", method_node(unit, e.target)}});
    }
    json rel = json::array();
    for (const auto& line : relation_lines(unit, s, a)) {
      json row = json::array();
      std::istringstream in(line);
      for (std::string cell; std::getline(in, cell, '\t');) row.push_back(cell);
      rel.push_back(row);
    }
    doc[a] = {{"callgraph", edges}, {"relations", rel}};
  }
  os << doc.dump(2) << '\n';
}

struct Options {
  std::string input;
  std::string analysis = "all";
  std::string emit = "tsv";
  std::string out;
  std::uint64_t seed = 1;
  std::string config;
  std::string corpus_dir;
  int count = 1;
  bool timings = false;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const Unit unit = load(o.input);
  const AnalysisSuite suite = run_all(unit);
  std::vector<std::string> selected =
      o.analysis == "all" ? kAnalyses : std::vector<std::string>{o.analysis};
  Sink sink(o.out, out);
  if (o.emit == "dot") emit_dot(sink.stream(), unit, suite, selected);
  if (o.emit == "tsv") emit_tsv(sink.stream(), unit, suite, selected);
  if (o.emit == "json") emit_json(sink.stream(), unit, suite, selected);
  return kOk;
}

EquivalenceReport compare(const Unit& unit, const Engines& engines) {
  return check_theorem1(engines.tfa(unit), engines.pta(unit));
}

int cmd_diff(const Options& o, const Engines& engines, std::ostream& out) {
  Sink sink(o.out, out);
  auto& os = sink.stream();
  if (!o.corpus_dir.empty()) {
    bool all_ok = true;
    os << "file,ok,mismatches,tfa_edges,pta_edges\n";
    for (const auto& path : corpus_files(o.corpus_dir)) {
      const Unit unit = load(path);
      const auto rep = compare(unit, engines);
      all_ok = all_ok && rep.ok;
      os << path.filename().string() << ',' << (rep.ok ? 1 : 0) << ',' << rep.mismatches.size()
         << ',' << rep.tfa_edges << ',' << rep.pta_edges << '\n';
    }
    return all_ok ? kOk : kMismatch;
  }
  const Unit unit = load(o.input);
  const auto rep = compare(unit, engines);
  os << render_report(unit, rep);
  if (rep.ok) return kOk;
  const Program witness = minimize_witness(
      unit.program(), [&](const Unit& u) { return !compare(u, engines).ok; });
  os << "WITNESS\n" << pretty_print(witness);
  return kMismatch;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenConfig cfg;
  if (!o.config.empty()) {
    try {
      cfg = parse_gen_config(read_file(o.config));
    } catch (const std::invalid_argument& e) {
      throw InputError(o.config + ": " + e.what());
    }
  }
  if (o.count < 1) throw CLI::ValidationError("--count", "must be at least 1");
  if (o.count == 1) {
    cfg.seed = o.seed;
    Sink sink(o.out, out);
    sink.stream() << pretty_print(gen_program(cfg));
    return kOk;
  }
  if (o.out.empty()) throw CLI::ValidationError("--out", "a directory is required with --count");
  fs::create_directories(o.out);
  for (int i = 0; i < o.count; ++i) {
    cfg.seed = o.seed + static_cast<std::uint64_t>(i);
    std::ostringstream name;
    name << "gen_" << std::setw(6) << std::setfill('0') << i << ".tfl";
    std::ofstream f(fs::path(o.out) / name.str(), std::ios::binary);
    if (!f) throw InputError(o.out + ": cannot write");
    f << pretty_print(gen_program(cfg));
  }
  out << "wrote " << o.count << " programs to " << o.out << '\n';
  return kOk;
}

int cmd_minimize(const Options& o, std::ostream& out) {
  const Unit unit = load(o.input);
  const TfaResult r = tfa_fixpoint(unit);
  const Partition p = bisim_minimize(r);
  quotient(r, p);  // refuses a partition that is not ≈-homogeneous
  {
    Sink sink(o.out, out);
    sink.stream() << dump_partition(unit, p);
  }
  out << "RATIO\t" << std::fixed << std::setprecision(4) << reduction_ratio(p) << "\tblocks\t"
      << p.size() << "\tvariables\t" << p.var_count() << '\n';
  return kOk;
}

int cmd_stats(const Options& o, const std::vector<std::string>& inputs, std::ostream& out) {
  std::vector<fs::path> files(inputs.begin(), inputs.end());
  if (!o.corpus_dir.empty()) {
    auto more = corpus_files(o.corpus_dir);
    files.insert(files.end(), more.begin(), more.end());
  }
  if (files.empty()) throw CLI::ValidationError("stats", "no input files");
  Sink sink(o.out, out);
  write_stats_header(sink.stream());
  for (const auto& path : files) {
    const Unit unit = load(path);
    write_stats_row(sink.stream(),
                    collect_stats(path.stem().string(), unit, run_all(unit), o.timings));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Engines& engines) {
  CLI::App app{"Type flow analysis workbench"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> stats_inputs;
  const auto analysis_check = CLI::IsMember({"cha", "rta", "vta", "tfa", "pta", "all"});

  auto* analyze = app.add_subcommand("analyze", "Run analyses and emit call graphs and relations");
  analyze->add_option("input", o.input, "Program file")->required();
  analyze->add_option("--analysis", o.analysis, "cha|rta|vta|tfa|pta|all")->check(analysis_check);
  analyze->add_option("--emit", o.emit, "dot|json|tsv")->check(CLI::IsMember({"dot", "json", "tsv"}));
  analyze->add_option("--out", o.out, "Output file");

  auto* diff = app.add_subcommand("diff", "Compare type flow against points-to results");
  diff->add_option("input", o.input, "Program file");
  diff->add_option("--corpus-dir", o.corpus_dir, "Directory of .tfl files");
  diff->add_option("--out", o.out, "Output file");

  auto* gen = app.add_subcommand("gen", "Generate random programs");
  gen->add_option("--seed", o.seed, "First seed");
  gen->add_option("--config", o.config, "key=value configuration file");
  gen->add_option("--count", o.count, "Number of programs");
  gen->add_option("--out", o.out, "Output file, or directory when --count > 1");

  auto* minimize = app.add_subcommand("minimize", "Bisimulation partition of the variables");
  minimize->add_option("input", o.input, "Program file")->required();
  minimize->add_option("--out", o.out, "Partition output file");

  auto* stats = app.add_subcommand("stats", "Per-program statistics as CSV");
  stats->add_option("inputs", stats_inputs, "Program files");
  stats->add_option("--corpus-dir", o.corpus_dir, "Directory of .tfl files");
  stats->add_option("--out", o.out, "Output file");
  stats->add_flag("--timings", o.timings, "Include analysis runtimes (not reproducible)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
    if (diff->parsed() && o.input.empty() == o.corpus_dir.empty()) {
      throw CLI::ValidationError("diff", "give exactly one of an input file or --corpus-dir");
    }
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (diff->parsed()) return cmd_diff(o, engines, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (minimize->parsed()) return cmd_minimize(o, out);
    return cmd_stats(o, stats_inputs, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const QuotientError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace tfa::cli
