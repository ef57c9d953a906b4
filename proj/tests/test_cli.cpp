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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "tfa/cli.hpp"

namespace tfa {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const cli::Engines& engines = {}) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, engines);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tfa_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kExample = testing::corpus_path("running_example.tfl");

TEST(Cli, AnalyzeDot) {
  const CliRun r = run({"analyze", "--analysis", "tfa", kExample, "--emit", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("digraph \"tfa\""), std::string::npos);
  EXPECT_NE(r.out.find("\"main\" -> \"A.m\" [label=\"main@7\"];"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t i = r.out.find("->"); i != std::string::npos; i = r.out.find("->", i + 1)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 1u);
}

TEST(Cli, AnalyzeJsonMirrorsDumps) {
  const CliRun r = run({"analyze", kExample, "--emit", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.size(), 5u);
  EXPECT_EQ(doc["pta"]["callgraph"][0]["site"], "main@7");
  const auto& rel = doc["tfa"]["relations"];
  EXPECT_NE(std::find(rel.begin(), rel.end(), nlohmann::json({"TF", "B", "main.z"})), rel.end());
}

TEST(Cli, AnalyzeEmptyProgram) {
  const CliRun r = run({"analyze", "--analysis", "all", testing::corpus_path("empty.tfl")});
  EXPECT_EQ(r.code, 0);
  for (const char* a : {"cha", "rta", "vta", "tfa", "pta"}) {
    EXPECT_NE(r.out.find(std::string("STAT\t") + a + "\tedges\t0\n"), std::string::npos);
  }
}

TEST(Cli, AnalyzeWritesOutFile) {
  const fs::path out = scratch("example.tsv");
  const CliRun r = run({"analyze", kExample, "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(out).find("EDGE\tcha\tmain@7\tA.m"), std::string::npos);
}

TEST(Cli, MalformedInput) {
  const fs::path bad = scratch("bad.tfl");
  std::ofstream(bad) << "class A {\n  A f\n}\nmain {}\n";
  const CliRun r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, cli::kInput);
  EXPECT_NE(r.err.find(":3:1:"), std::string::npos);
  EXPECT_EQ(run({"analyze", "/no/such/file.tfl"}).code, cli::kInput);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"analyze", kExample, "--analysis", "xta"}).code, cli::kUsage);
  EXPECT_EQ(run({"analyze", kExample, "--emit", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"diff"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--count", "3"}).code, cli::kUsage);
}

TEST(Cli, DiffAgrees) {
  const CliRun r = run({"diff", kExample});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("EQUIVALENT", 0), 0u);
}

TEST(Cli, DiffWithBrokenEngineReportsWitness) {
  cli::Engines broken;
  // Drops every type flowing into main.z.
  broken.tfa = [](const Unit& u) {
    TfaResult r = tfa_fixpoint(u);
    auto z = u.vars().find("main.z");
    if (!z) return r;
    RelationStore s(u.vars().size(), u.classes().size());
    for (const auto& [c, v] : r.store.typeflow_tuples()) {
      if (v != *z) s.add_type(c, v);
    }
    r.store = s;
    return r;
  };
  const CliRun r = run({"diff", kExample}, broken);
  EXPECT_EQ(r.code, cli::kMismatch);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("VAR\tmain.z\ttfa_only={}\tpta_only={B}"), std::string::npos);
  EXPECT_NE(r.out.find("WITNESS\n"), std::string::npos);
  EXPECT_NE(r.out.find("z = x.m(x);"), std::string::npos);
}

TEST(Cli, GenCorpusThenDiffAndStats) {
  const fs::path dir = scratch("corpus");
  fs::remove_all(dir);
  const fs::path cfg = scratch("gen.cfg");
  std::ofstream(cfg) << "max_classes = 6\nmain_max_statements = 20\n";
  ASSERT_EQ(run({"gen", "--seed", "5", "--count", "25", "--config", cfg.string(), "--out",
                 dir.string()})
                .code,
            0);
  const CliRun d = run({"diff", "--corpus-dir", dir.string()});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(std::count(d.out.begin(), d.out.end(), '\n'), 26);

  const CliRun s = run({"stats", "--corpus-dir", dir.string()});
  EXPECT_EQ(s.code, 0);
  std::istringstream lines(s.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 18) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 26u);
}

TEST(Cli, GenSingleIsDeterministic) {
  const CliRun a = run({"gen", "--seed", "9"});
  const CliRun b = run({"gen", "--seed", "9"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(load_unit(a.out));
}

TEST(Cli, BadConfigIsInputError) {
  const fs::path cfg = scratch("bad.cfg");
  std::ofstream(cfg) << "nonsense = 1\n";
  EXPECT_EQ(run({"gen", "--config", cfg.string()}).code, cli::kInput);
}

TEST(Cli, Minimize) {
  const CliRun r = run({"minimize", kExample});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("BLOCK\tA.m.r\tA.m.r\tA.m.return\tmain.b\tmain.z\n"), std::string::npos);
  EXPECT_NE(r.out.find("RATIO\t0.5556"), std::string::npos);

  const fs::path one = scratch("one.tfl");
  std::ofstream(one) << "class A {} main { A x; x = new A(); }\n";
  EXPECT_NE(run({"minimize", one.string()}).out.find("RATIO\t0.0000"), std::string::npos);

  const fs::path twins = scratch("twins.tfl");
  std::ofstream(twins) << "class A {} main { A u; A v; u = new A(); v = new A(); }\n";
  EXPECT_NE(run({"minimize", twins.string()}).out.find("RATIO\t0.5000"), std::string::npos);
}

TEST(Cli, EverySubcommandIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", kExample, "--emit", "json"},
      {"analyze", testing::corpus_path("linked_list.tfl"), "--emit", "tsv"},
      {"diff", kExample},
      {"gen", "--seed", "123"},
      {"minimize", testing::corpus_path("dispatch_mix.tfl")},
      {"stats", kExample, testing::corpus_path("field_alias.tfl")},
  };
  for (const auto& cmd : commands) {
    const CliRun a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.code, b.code) << cmd[0];
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

}  // namespace
}  // namespace tfa
