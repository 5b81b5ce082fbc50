// Copyright 2026 The ftspanner Authors.
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


// The CLI is a thin adapter: its artifacts must equal what the library
// produces for the same inputs, and its exit codes follow the documented
// convention. The binary path comes from the build.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ftspanner/bench.h"
#include "ftspanner/distsim.h"
#include "ftspanner/gen.h"
#include "ftspanner/greedy.h"
#include "ftspanner/lbc.h"
#include "ftspanner/report.h"
#include "ftspanner/verify.h"

namespace ftspanner {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(FTSPANNER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ftspanner_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    spec_.family = Family::kErdosRenyi;
    spec_.n = 14;
    spec_.p = 0.4;
    spec_.seed = 21;
    spec_.weights = WeightModel::UniformInt(1, 9);
    graph_path_ = (dir_ / "g.txt").string();
    const CliRun r = Cli("gen --family erdos-renyi --n 14 --p 0.4 --seed 21 --weights 1:9 --out " +
                      graph_path_);
    ASSERT_EQ(r.code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  GenSpec spec_;
  std::string graph_path_;
};

TEST_F(CliTest, GenMatchesLibrary) {
  EXPECT_EQ(Slurp(graph_path_), SerializeGraph(Generate(spec_)));
  EXPECT_EQ(Cli("gen --family erdos-renyi --n 14 --p 0.4 --seed 21 --weights 1:9").out,
            SerializeGraph(Generate(spec_)));
}

TEST_F(CliTest, BuildMatchesLibraryAndWritesSidecar) {
  const Graph g = Generate(spec_);
  const SpannerParams p{2, 1, FaultMode::kEdge};
  const std::string out = (dir_ / "h.txt").string();
  const CliRun r = Cli("build --graph " + graph_path_ + " --k 2 --f 1 --mode edge --out " + out +
                    " --json");
  ASSERT_EQ(r.code, 0);
  const SpannerResult want = ModifiedGreedyWeighted(g, p);
  EXPECT_EQ(Slurp(out), SerializeGraph(g.EdgeSubgraph(want.spanner_edge_ids)));
  const Json sidecar = Json::parse(Slurp(out + ".json"));
  EXPECT_EQ(Json::parse(r.out), sidecar);
  EXPECT_EQ(sidecar["stats"], ToJson(want.stats,
                                     AuditSize(g.num_vertices(), want.spanner_edge_ids.size(), p),
                                     false));

  // Random order for the unweighted algorithm.
  GenSpec unit = spec_;
  unit.weights = WeightModel::Unit();
  const std::string unit_path = (dir_ / "u.txt").string();
  std::ofstream(unit_path) << SerializeGraph(Generate(unit));
  const Graph gu = Generate(unit);
  const CliRun ru = Cli("build --graph " + unit_path +
                     " --k 3 --f 2 --algo greedy-unweighted --order random:5");
  ASSERT_EQ(ru.code, 0);
  const SpannerResult wu = ModifiedGreedyUnweighted(
      gu, {3, 2, FaultMode::kVertex}, RandomEdgeOrder(gu.num_edges(), 5));
  EXPECT_EQ(ru.out, SerializeGraph(gu.EdgeSubgraph(wu.spanner_edge_ids)));
}

TEST_F(CliTest, VerifyExitCodesAndReport) {
  const Graph g = Generate(spec_);
  const SpannerParams p{2, 1, FaultMode::kVertex};
  const std::string good = (dir_ / "good.txt").string();
  ASSERT_EQ(Cli("build --graph " + graph_path_ + " --k 2 --f 1 --out " + good).code, 0);
  const CliRun ok = Cli("verify --graph " + graph_path_ + " --spanner " + good + " --k 2 --f 1");
  EXPECT_EQ(ok.code, 0);
  const auto ids = ModifiedGreedyWeighted(g, p).spanner_edge_ids;
  EXPECT_EQ(Json::parse(ok.out), ToJson(VerifyFtSpanner(g, ids, p)));

  std::vector<EdgeId> fewer(ids.begin() + 1, ids.end());
  const std::string bad = (dir_ / "bad.txt").string();
  std::ofstream(bad) << SerializeGraph(g.EdgeSubgraph(fewer));
  const CliRun no = Cli("verify --graph " + graph_path_ + " --spanner " + bad + " --k 1 --f 1");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(Json::parse(no.out), ToJson(VerifyFtSpanner(g, fewer, {1, 1, FaultMode::kVertex})));
  EXPECT_FALSE(Json::parse(no.out)["valid"].get<bool>());
}

TEST_F(CliTest, LbcMatchesLibrary) {
  const Graph g = Generate(spec_);
  const CliRun r = Cli("lbc --graph " + graph_path_ + " --u 0 --v 5 --t 3 --alpha 2 --mode edge");
  ASSERT_EQ(r.code, 0);
  const LbcInstance inst{g.view(), 0, 5, 3, 2, FaultMode::kEdge};
  EXPECT_EQ(Json::parse(r.out), ToJson(LbcGapDecide(inst)));
}

TEST_F(CliTest, SimulateMatchesLibrary) {
  const Graph g = Generate(spec_);
  for (const std::string model : {"local", "congest"}) {
    const std::string out = (dir_ / ("s_" + model + ".txt")).string();
    const CliRun r = Cli("simulate --graph " + graph_path_ + " --model " + model +
                      " --k 2 --f 1 --seed 4 --out " + out + " --json");
    ASSERT_EQ(r.code, 0) << model;
    SimConfig cfg;
    cfg.model = ParseModel(model);
    cfg.seed = 4;
    const SimSpannerResult want = cfg.model == Model::kLocal
                                      ? LocalFtSpanner(g, {2, 1, FaultMode::kVertex}, cfg)
                                      : CongestFtSpanner(g, {2, 1, FaultMode::kVertex}, cfg);
    EXPECT_EQ(Slurp(out), SerializeGraph(g.EdgeSubgraph(want.spanner.spanner_edge_ids)));
    const Json trace = Json::parse(Slurp(out + ".json"));
    EXPECT_EQ(trace["trace"], ToJson(want.trace));
    EXPECT_EQ(Json::parse(r.out), trace);
  }
}

TEST_F(CliTest, BenchMatchesLibrary) {
  const std::string suite_path = (dir_ / "suite.json").string();
  const std::string suite = R"({"entries": [
    {"family": "cycle", "n": 8, "k": 2, "f": 1, "algo": "greedy-weighted", "seeds": [1]},
    {"family": "complete", "n": 20, "k": 2, "f": 1, "algo": "exact", "seeds": [1, 2]},
    {"family": "erdos-renyi", "n": 24, "p": 0.3, "k": 2, "f": 1, "algo": "congest", "seeds": [3]}
  ]})";
  std::ofstream(suite_path) << suite;
  const CliRun r = Cli("bench " + suite_path + " --no-timing --jobs 2");
  ASSERT_EQ(r.code, 0);
  std::string want;
  RunBench(ParseBenchSuite(suite), {1, true},
           [&](const BenchRecord& rec) { want += ToJson(rec).dump() + "\n"; });
  EXPECT_EQ(r.out, want);
  const CliRun csv = Cli("bench " + suite_path + " --no-timing --csv");
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);
}

TEST_F(CliTest, UsageAndGuardExitCodes) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("build").code, 2);
  EXPECT_EQ(Cli("build --graph " + graph_path_ + " --mode sideways").code, 2);
  EXPECT_EQ(Cli("build --graph /nonexistent/file").code, 2);
  EXPECT_EQ(Cli("build --graph " + graph_path_ + " --algo greedy-unweighted").code, 2);
  EXPECT_EQ(Cli("build --graph " + graph_path_ + " --order random:x").code, 2);
  const std::string bad_graph = (dir_ / "bad.txt").string();
  std::ofstream(bad_graph) << "2 1\n0 0 1\n";
  EXPECT_EQ(Cli("build --graph " + bad_graph).code, 2);
  EXPECT_EQ(Cli("build --graph " + graph_path_ + " --algo exact --f 3").code, 3);
  EXPECT_EQ(Cli("lbc --graph " + graph_path_ + " --u 0 --v 1 --t 2 --alpha 0 --mode edge --exact")
                .code,
            3);
  EXPECT_EQ(Cli("simulate --graph " + graph_path_ + " --model congest --word-bits 2").code, 2);
  EXPECT_EQ(Cli("--help").code, 0);
}

}  // namespace
}  // namespace ftspanner
