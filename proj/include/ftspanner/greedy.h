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

// Greedy constructions of f-fault-tolerant (2k-1)-spanners.
//
// All three scan the edges once and decide each edge against the partial
// spanner H built so far:
//
//   ExactGreedy            adds {u,v} iff some fault set F with |F| <= f
//                          gives d_{H\F}(u,v) > (2k-1) w(u,v), found by
//                          trying every F. Exponential in f.
//   ModifiedGreedy*        adds {u,v} iff LbcGapDecide(H, u, v, t = 2k-1,
//                          alpha = f) says YES. H is treated as unweighted.
//
// ExactGreedy and ModifiedGreedyWeighted visit edges by nondecreasing
// weight, ties by ascending id.

#ifndef FTSPANNER_GREEDY_H_
#define FTSPANNER_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ftspanner/graph.h"

namespace ftspanner {

struct SpannerParams {
  std::uint32_t k = 1;  // stretch is 2k-1
  std::uint32_t f = 0;  // fault budget
  FaultMode mode = FaultMode::kVertex;

  std::uint32_t stretch() const { return 2 * k - 1; }
};

struct EdgeDecision {
  EdgeId edge = 0;
  bool kept = false;
  // Hops of the first short u-v path found in H when the edge was
  // considered; 0 when H had none.
  std::uint32_t first_path_hops = 0;
};

struct SpannerStats {
  std::size_t edges_kept = 0;
  std::uint64_t lbc_calls = 0;
  std::uint64_t bfs_runs = 0;
  std::vector<EdgeId> edge_order;
  // One entry per edge, in edge_order. Empty for ExactGreedy.
  std::vector<EdgeDecision> decisions;
};

struct SpannerResult {
  // Ascending.
  std::vector<EdgeId> spanner_edge_ids;
  SpannerStats stats;
};

// Sanity caps. Construction refuses parameters beyond them with
// GuardExceeded instead of running unboundedly long.
struct GreedyLimits {
  std::uint32_t max_k = 64;
  std::uint32_t max_f = 1u << 16;
  // ExactGreedy only.
  std::size_t exact_max_vertices = 14;
  std::uint32_t exact_max_faults = 2;
};

// Throws InvalidArgument for k == 0.
void ValidateParams(const SpannerParams& p, const GreedyLimits& limits = {});

// Edge ids by nondecreasing weight, ties by ascending id.
std::vector<EdgeId> NondecreasingWeightOrder(const Graph& g);

// A uniformly random permutation of 0..m-1 (Fisher-Yates), reproducible
// from `seed`.
std::vector<EdgeId> RandomEdgeOrder(std::size_t m, std::uint64_t seed);

// Throws GuardExceeded beyond limits.exact_max_vertices or
// limits.exact_max_faults.
SpannerResult ExactGreedy(const Graph& g, const SpannerParams& p,
                          const GreedyLimits& limits = {});

// The modified greedy loop over an explicit order, with no requirement on
// weights. On weighted inputs with an order other than nondecreasing weight
// the result need not be a spanner; ModifiedGreedyUnweighted and
// ModifiedGreedyWeighted are the supported entry points. Throws
// InvalidArgument if `order` is not a permutation of the edge ids.
SpannerResult ModifiedGreedyWithOrder(const Graph& g, const SpannerParams& p,
                                      std::span<const EdgeId> order,
                                      const GreedyLimits& limits = {});

// Requires every weight to equal 1 (InvalidArgument otherwise). An empty
// `order` means ascending edge id.
SpannerResult ModifiedGreedyUnweighted(const Graph& g, const SpannerParams& p,
                                       std::span<const EdgeId> order = {},
                                       const GreedyLimits& limits = {});

SpannerResult ModifiedGreedyWeighted(const Graph& g, const SpannerParams& p,
                                     const GreedyLimits& limits = {});

}  // namespace ftspanner

#endif  // FTSPANNER_GREEDY_H_
