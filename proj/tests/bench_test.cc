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


#include "ftspanner/bench.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ftspanner/errors.h"
#include "ftspanner/verify.h"

namespace ftspanner {
namespace {

std::vector<BenchRecord> RunAll(const std::string& suite, std::size_t jobs = 1) {
  std::vector<BenchRecord> out;
  RunBench(ParseBenchSuite(suite), {jobs, true},
           [&](const BenchRecord& r) { out.push_back(r); });
  return out;
}

TEST(BenchTest, EmptySuite) {
  EXPECT_TRUE(RunAll("[]").empty());
  EXPECT_TRUE(RunAll(R"({"entries": []})").empty());
}

TEST(BenchTest, CycleKeepsEveryEdge) {
  const auto records = RunAll(
      R"([{"family": "cycle", "n": 8, "k": 2, "f": 1, "algo": "greedy-weighted", "seeds": [1]}])");
  ASSERT_EQ(records.size(), 1u);
  const BenchRecord& r = records[0];
  EXPECT_EQ(r.edges_kept, 8u);
  EXPECT_FALSE(r.error.has_value());
  EXPECT_DOUBLE_EQ(r.bound_ratio, 8.0 / (2.0 * 1.0 * std::pow(8.0, 1.5)));
  // Confirm with the verifier: C_8 minus any edge fails under one fault.
  GenSpec spec = r.spec;
  const Graph g = Generate(spec);
  std::vector<EdgeId> all = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(VerifyFtSpanner(g, all, r.params).valid);
  all.pop_back();
  EXPECT_FALSE(VerifyFtSpanner(g, all, r.params).valid);
}

TEST(BenchTest, FaultFreeEntryUsesClassicBound) {
  const auto records = RunAll(
      R"([{"family": "complete", "n": 9, "k": 2, "f": 0, "algo": "greedy-unweighted", "seeds": [0]}])");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_DOUBLE_EQ(records[0].bound_ratio,
                   static_cast<double>(records[0].edges_kept) / std::pow(9.0, 1.5));
}

TEST(BenchTest, ErrorsStayInTheirRecord) {
  const auto records = RunAll(R"([
    {"family": "complete", "n": 20, "k": 2, "f": 1, "algo": "exact", "seeds": [1]},
    {"family": "path", "n": 5, "k": 2, "f": 1, "algo": "greedy-unweighted",
     "weights": {"lo": 2, "hi": 4}, "seeds": [1]},
    {"family": "path", "n": 5, "k": 2, "f": 1, "algo": "baswana-sen", "seeds": [1]},
    {"family": "path", "n": 5, "k": 2, "f": 1, "algo": "exact", "seeds": [1]}
  ])");
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].error_kind, "guard");
  EXPECT_EQ(records[1].error_kind, "invalid");
  EXPECT_EQ(records[2].error_kind, "invalid");
  EXPECT_FALSE(records[3].error.has_value());
  EXPECT_EQ(records[3].edges_kept, 4u);
}

TEST(BenchTest, SuiteParsingErrors) {
  EXPECT_THROW(ParseBenchSuite("{"), ParseError);
  EXPECT_THROW(ParseBenchSuite(R"([{"family": "cycle", "n": 5, "algo": "magic", "seeds": [1]}])"),
               InvalidArgument);
  EXPECT_THROW(ParseBenchSuite(R"([{"family": "cycle", "n": 5}])"), InvalidArgument);
  EXPECT_THROW(ParseBenchSuite(R"([{"n": 5, "seeds": [1]}])"), InvalidArgument);
  EXPECT_THROW(ParseBenchSuite(R"([{"family": "cycle", "n": "five", "seeds": [1]}])"),
               InvalidArgument);
  EXPECT_THROW(ParseBenchSuite(R"({"runs": []})"), InvalidArgument);
}

TEST(BenchTest, ParallelRunKeepsSuiteOrder) {
  const std::string suite = R"([
    {"family": "erdos-renyi", "n": 60, "p": 0.2, "k": 2, "f": 2, "algo": "greedy-weighted",
     "weights": {"lo": 1, "hi": 9}, "seeds": [1, 2, 3]},
    {"family": "cycle", "n": 6, "k": 2, "f": 1, "algo": "local", "seeds": [4]},
    {"family": "erdos-renyi", "n": 30, "p": 0.3, "k": 2, "f": 1, "algo": "congest", "seeds": [5, 6]},
    {"family": "grid", "n": 16, "k": 3, "f": 0, "algo": "baswana-sen", "seeds": [7]}
  ])";
  const auto serial = RunAll(suite, 1);
  const auto parallel = RunAll(suite, 4);
  ASSERT_EQ(serial.size(), 7u);
  ASSERT_EQ(parallel.size(), serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(ToJson(serial[i]).dump(), ToJson(parallel[i]).dump());
  }
  EXPECT_TRUE(serial[3].rounds_used.has_value());
  EXPECT_FALSE(serial[0].rounds_used.has_value());
}

TEST(BenchTest, CsvMirrorsRecordFields) {
  const auto records = RunAll(
      R"([{"family": "star", "n": 5, "k": 2, "f": 1, "algo": "local", "seeds": [2]}])");
  std::ostringstream out;
  WriteCsvHeader(out);
  WriteCsvRow(out, records[0]);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','),
            std::count(row.begin(), row.end(), ','));
  EXPECT_EQ(row.rfind("star,5,2,", 0), 0u) << row;
}

TEST(BenchTest, AlgoNamesRoundTrip) {
  for (const char* name : {"exact", "greedy-unweighted", "greedy-weighted", "local",
                           "congest", "baswana-sen"}) {
    EXPECT_EQ(ToString(ParseBenchAlgo(name)), name);
  }
}

}  // namespace
}  // namespace ftspanner
