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

#include "ftspanner/greedy.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "ftspanner/errors.h"
#include "ftspanner/lbc.h"
#include "ftspanner/random.h"

namespace ftspanner {

void ValidateParams(const SpannerParams& p, const GreedyLimits& limits) {
  if (p.k == 0) throw InvalidArgument("k must be at least 1");
  if (p.k > limits.max_k) {
    throw GuardExceeded("k=" + std::to_string(p.k) + " exceeds the cap of " +
                        std::to_string(limits.max_k));
  }
  if (p.f > limits.max_f) {
    throw GuardExceeded("f=" + std::to_string(p.f) + " exceeds the cap of " +
                        std::to_string(limits.max_f));
  }
}

std::vector<EdgeId> NondecreasingWeightOrder(const Graph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).w < g.edge(b).w;
  });
  return order;
}

std::vector<EdgeId> RandomEdgeOrder(std::size_t m, std::uint64_t seed) {
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  Rng rng(seed);
  for (std::size_t i = m; i > 1; --i) {
    std::swap(order[i - 1], order[rng.UniformInt(0, i - 1)]);
  }
  return order;
}

namespace {

// Does some F with |F| <= f push d_{H\F}(u,v) above `limit`? Distances only
// grow as F grows, so sets of exactly min(f, #candidates) suffice.
bool SomeFaultSetBreaksStretch(const Subgraph& h, const Edge& e,
                               const SpannerParams& p, Weight limit) {
  const Graph& g = h.parent();
  std::vector<std::uint32_t> candidates;
  if (p.mode == FaultMode::kVertex) {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (x != e.u && x != e.v) candidates.push_back(x);
    }
  } else {
    candidates = h.edge_ids();
  }
  const std::size_t c = candidates.size();
  const std::size_t size = std::min<std::size_t>(p.f, c);
  FaultMask mask(p.mode, g.num_vertices(), g.num_edges());
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    mask.clear();
    for (std::size_t i : pick) mask.block(candidates[i]);
    if (Distance(h.view(), e.u, e.v, mask) > limit) return true;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == c - size + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void CheckPermutation(const Graph& g, std::span<const EdgeId> order) {
  if (order.size() != g.num_edges()) {
    throw InvalidArgument("edge order has " + std::to_string(order.size()) +
                          " entries, graph has " +
                          std::to_string(g.num_edges()) + " edges");
  }
  std::vector<std::uint8_t> seen(g.num_edges(), 0);
  for (EdgeId id : order) {
    if (id >= g.num_edges() || seen[id]) {
      throw InvalidArgument("edge order is not a permutation of edge ids");
    }
    seen[id] = 1;
  }
}

}  // namespace

SpannerResult ExactGreedy(const Graph& g, const SpannerParams& p,
                          const GreedyLimits& limits) {
  ValidateParams(p, limits);
  if (g.num_vertices() > limits.exact_max_vertices ||
      p.f > limits.exact_max_faults) {
    throw GuardExceeded(
        "exact greedy is limited to n <= " +
        std::to_string(limits.exact_max_vertices) +
        " and f <= " + std::to_string(limits.exact_max_faults) + " (got n=" +
        std::to_string(g.num_vertices()) + ", f=" + std::to_string(p.f) + ")");
  }
  SpannerResult result;
  result.stats.edge_order = NondecreasingWeightOrder(g);
  Subgraph h(g);
  for (EdgeId id : result.stats.edge_order) {
    const Edge& e = g.edge(id);
    // A disconnected pair has d = infinity, which exceeds any finite limit.
    if (SomeFaultSetBreaksStretch(h, e, p, SaturatingMul(p.stretch(), e.w))) {
      h.add_edge(id);
    }
  }
  result.spanner_edge_ids = h.edge_ids();
  result.stats.edges_kept = h.num_edges();
  return result;
}

SpannerResult ModifiedGreedyWithOrder(const Graph& g, const SpannerParams& p,
                                      std::span<const EdgeId> order,
                                      const GreedyLimits& limits) {
  ValidateParams(p, limits);
  CheckPermutation(g, order);
  SpannerResult result;
  result.stats.edge_order.assign(order.begin(), order.end());
  result.stats.decisions.reserve(order.size());
  Subgraph h(g);
  HopBoundedSearch search;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    LbcInstance inst{h.view(), e.u, e.v, p.stretch(), p.f, p.mode};
    const std::uint64_t runs_before = search.runs();
    LbcVerdict verdict = LbcGapDecide(inst, search);
    ++result.stats.lbc_calls;
    result.stats.bfs_runs += search.runs() - runs_before;

    const bool keep = verdict.answer == LbcAnswer::kYes;
    if (keep) h.add_edge(id);
    result.stats.decisions.push_back({id, keep, verdict.first_path_hops});
  }
  result.spanner_edge_ids = h.edge_ids();
  result.stats.edges_kept = h.num_edges();
  return result;
}

SpannerResult ModifiedGreedyUnweighted(const Graph& g, const SpannerParams& p,
                                       std::span<const EdgeId> order,
                                       const GreedyLimits& limits) {
  if (!g.is_unit_weight()) {
    throw InvalidArgument(
        "unweighted modified greedy requires every weight to be 1");
  }
  if (order.empty()) {
    std::vector<EdgeId> by_id(g.num_edges());
    std::iota(by_id.begin(), by_id.end(), EdgeId{0});
    return ModifiedGreedyWithOrder(g, p, by_id, limits);
  }
  return ModifiedGreedyWithOrder(g, p, order, limits);
}

SpannerResult ModifiedGreedyWeighted(const Graph& g, const SpannerParams& p,
                                     const GreedyLimits& limits) {
  const std::vector<EdgeId> order = NondecreasingWeightOrder(g);
  return ModifiedGreedyWithOrder(g, p, order, limits);
}

}  // namespace ftspanner
