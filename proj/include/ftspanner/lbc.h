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

// Length-bounded cut: a set of non-terminal vertices (or of edges) whose
// deletion leaves no u-v path with at most t hops.
//
// LbcGapDecide answers the gap question "is there a cut of size <= alpha?"
// by repeatedly deleting a shortest short path (a frequency-style hitting
// set approximation). It must say YES when a cut of size <= alpha exists
// and NO when every cut is larger than alpha * t.

#ifndef FTSPANNER_LBC_H_
#define FTSPANNER_LBC_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ftspanner/graph.h"

namespace ftspanner {

struct LbcInstance {
  GraphView graph;
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t t = 1;      // hop bound, >= 1
  std::uint32_t alpha = 0;  // cut-size threshold
  FaultMode mode = FaultMode::kVertex;
};

enum class LbcAnswer { kYes, kNo };

struct LbcVerdict {
  LbcAnswer answer = LbcAnswer::kNo;
  // Present iff answer == kYes; at most alpha * t members.
  std::optional<FaultSet> witness_cut;
  // BFS rounds spent, at most alpha + 1.
  std::uint32_t iterations_used = 0;
  // Hop count of the path found by the first BFS round; 0 if none.
  std::uint32_t first_path_hops = 0;
};

// Throws InvalidArgument if u == v, t == 0, or a terminal is out of range.
LbcVerdict LbcGapDecide(const LbcInstance& inst);

// Same, reusing caller-owned scratch space. The greedy loop calls this
// once per edge.
LbcVerdict LbcGapDecide(const LbcInstance& inst, HopBoundedSearch& search);

struct LbcExactResult {
  // Minimum cut cardinality; nullopt when no cut exists at all (the edge
  // {u,v} is present in vertex mode).
  std::optional<std::size_t> min_cut_size;
  std::optional<FaultSet> cut;
};

inline constexpr std::size_t kLbcExactMaxCandidates = 25;

// Exhaustive subset enumeration, smallest subsets first. The candidates are
// V \ {u,v} in vertex mode and every edge present in the view in edge mode.
// Throws GuardExceeded when there are more than `max_candidates`; the
// `alpha` field of the instance is ignored.
LbcExactResult LbcExact(const LbcInstance& inst,
                        std::size_t max_candidates = kLbcExactMaxCandidates);

}  // namespace ftspanner

#endif  // FTSPANNER_LBC_H_
