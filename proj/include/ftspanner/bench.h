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


// Benchmark suites: a JSON list of configurations, each run once per seed.
//
//   {"entries": [{"family": "erdos-renyi", "n": 64, "p": 0.1,
//                 "k": 2, "f": 1, "mode": "vertex",
//                 "algo": "greedy-weighted", "seeds": [1, 2, 3]}]}
//
// A bare top-level array of entries is accepted too. Optional entry keys:
// radius, paths, hops, weights ("unit" or {"lo": a, "hi": b}),
// largest_component. The seed feeds the generator and, for the simulated
// algorithms, the simulation.

#ifndef FTSPANNER_BENCH_H_
#define FTSPANNER_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ftspanner/gen.h"
#include "ftspanner/greedy.h"
#include "ftspanner/report.h"

namespace ftspanner {

enum class BenchAlgo {
  kExact,
  kGreedyUnweighted,
  kGreedyWeighted,
  kLocal,       // LocalFtSpanner
  kCongest,     // CongestFtSpanner
  kBaswanaSen,  // f must be 0
};

std::string_view ToString(BenchAlgo algo);
// Throws InvalidArgument for unknown names.
BenchAlgo ParseBenchAlgo(std::string_view text);

struct BenchEntry {
  GenSpec spec;  // spec.seed is replaced by each of `seeds`
  SpannerParams params;
  BenchAlgo algo = BenchAlgo::kGreedyWeighted;
  std::vector<std::uint64_t> seeds;
};

struct BenchRecord {
  GenSpec spec;
  SpannerParams params;
  BenchAlgo algo = BenchAlgo::kGreedyWeighted;
  std::size_t n = 0;  // after largest-component extraction
  std::size_t m = 0;
  std::size_t edges_kept = 0;
  // edges_kept / SpannerSizeBound(n, k, f).
  double bound_ratio = 0;
  std::int64_t wall_time_ms = 0;
  std::optional<std::uint64_t> rounds_used;
  // Set when the run raised a library error; the other results are zero.
  std::optional<std::string> error;
  // "guard", "invalid" or "simulation".
  std::optional<std::string> error_kind;
};

// Throws ParseError (line 0) for malformed JSON and InvalidArgument for
// bad field values such as an unknown algo.
std::vector<BenchEntry> ParseBenchSuite(std::string_view text);

// One run. Library errors are captured in the record.
BenchRecord RunBenchRecord(const BenchEntry& entry, std::uint64_t seed);

struct BenchOptions {
  // Worker threads; 0 or 1 runs inline.
  std::size_t jobs = 1;
  // Report wall_time_ms as 0, for reproducible output.
  bool no_timing = false;
};

// Runs every (entry, seed) pair and hands the records to `sink` in suite
// order, whatever order the workers finish in.
void RunBench(const std::vector<BenchEntry>& suite, const BenchOptions& options,
              const std::function<void(const BenchRecord&)>& sink);

Json ToJson(const BenchRecord& record);
void WriteCsvHeader(std::ostream& out);
void WriteCsvRow(std::ostream& out, const BenchRecord& record);

}  // namespace ftspanner

#endif  // FTSPANNER_BENCH_H_
