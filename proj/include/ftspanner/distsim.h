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

// Distributed fault-tolerant spanner constructions, run on RoundEngine.
//
// LOCAL:   padded decomposition into O(log n) partitions of low-diameter
//          clusters, each cluster gathered at its center, a greedy spanner
//          computed there and scattered back; the union over all clusters.
// CONGEST: O(f^3 log n) subsampled Baswana-Sen instances (participation
//          probability 1/f), time-multiplexed with iteration tags; the
//          union of their outputs.

#ifndef FTSPANNER_DISTSIM_H_
#define FTSPANNER_DISTSIM_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ftspanner/engine.h"
#include "ftspanner/graph.h"
#include "ftspanner/greedy.h"

namespace ftspanner {

enum class ClusterAlgorithm { kModifiedGreedy, kExactGreedy };

struct SimConfig {
  Model model = Model::kLocal;
  // 0 selects the default word_factor * ceil(log2 max(n, 16)).
  std::uint64_t word_bits = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 10'000'000;
  // Fresh-randomness retries after a detected whp failure.
  std::uint32_t retries = 3;

  std::uint32_t word_factor = 4;
  // Padded decomposition: ceil(partition_factor * log2 n) partitions, start
  // shifts ~ Exp(shift_rate) truncated at shift_cap_factor * log2 n.
  double partition_factor = 8.0;
  double shift_rate = 0.25;
  double shift_cap_factor = 3.0;
  ClusterAlgorithm cluster_algorithm = ClusterAlgorithm::kModifiedGreedy;
  // Multiplexed construction: ceil(iteration_factor * f^3 * log2 n) iterations
  // and slot_factor * f * ceil(log2 n) slots per Baswana-Sen round.
  double iteration_factor = 4.0;
  std::uint32_t slot_factor = 8;
};

// log2 n, floored at 1 so that tiny graphs still get one partition/round.
double Log2N(std::size_t n);

// The word budget actually used for `n` vertices. Throws InvalidArgument if
// an explicit word_bits is below ceil(log2 n) or max_rounds is 0.
std::uint64_t EffectiveWordBits(const SimConfig& cfg, std::size_t n);

struct Cluster {
  std::uint32_t partition = 0;
  Vertex center = 0;
  // Ascending.
  std::vector<Vertex> members;
  // Depth of the cluster's BFS tree below the center. Every cluster is
  // connected and its hop diameter is at most 2 * hop_radius.
  std::uint32_t hop_radius = 0;
};

struct ClusterDecomposition {
  // partitions[i][v] = index into `clusters` of v's cluster in partition i.
  std::vector<std::vector<std::uint32_t>> partitions;
  std::vector<Cluster> clusters;
  // tree_parent[i][v]: v's parent in its cluster tree (the center maps to
  // itself).
  std::vector<std::vector<Vertex>> tree_parent;
};

struct DecompositionResult {
  ClusterDecomposition decomposition;
  SimTrace trace;
};

struct SimSpannerResult {
  SpannerResult spanner;
  SimTrace trace;
};

// Exponential-shift clustering, all partitions grown in parallel in the
// LOCAL model. Throws SimulationError past cfg.max_rounds.
DecompositionResult PaddedDecomposition(const Graph& g, const SimConfig& cfg);

// Edges with no cluster containing both endpoints, ascending.
std::vector<EdgeId> UncoveredEdges(const Graph& g,
                                   const ClusterDecomposition& d);

// Requires cfg.model == kLocal. Retries the decomposition with fresh
// randomness while some edge is uncovered, up to cfg.retries times, then
// throws SimulationError.
SimSpannerResult LocalFtSpanner(const Graph& g, const SpannerParams& p,
                                const SimConfig& cfg);

// Requires cfg.model == kCongest. A (2k-1)-spanner, one message of at most
// the word budget per edge direction per round.
SimSpannerResult BaswanaSen(const Graph& g, std::uint32_t k,
                            const SimConfig& cfg);

// Requires cfg.model == kCongest and p.f >= 1. Retries (fresh randomness)
// when some edge needs more slots than a round provides. Participants are
// sampled vertices in both fault modes: an f-VFT spanner is also f-EFT,
// since each faulty edge other than {a,b} has an endpoint outside {a,b}.
SimSpannerResult CongestFtSpanner(const Graph& g, const SpannerParams& p,
                                    const SimConfig& cfg);

}  // namespace ftspanner

#endif  // FTSPANNER_DISTSIM_H_
