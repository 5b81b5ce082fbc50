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

#include <gtest/gtest.h>

#include "ftspanner/errors.h"
#include "ftspanner/gen.h"
#include "ftspanner/verify.h"
#include "oracles.h"

namespace ftspanner {
namespace {

Graph Make(Family family, std::size_t n) {
  GenSpec spec;
  spec.family = family;
  spec.n = n;
  return Generate(spec);
}

std::vector<EdgeId> AllIds(const Graph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  for (EdgeId i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

// u=0, x=1, v=2 with w(u,x) = w(x,v) = 1 and w(u,v) = 3.
Graph WeightedTriangle() { return Graph(3, {{0, 2, 3}, {0, 1, 1}, {1, 2, 1}}); }

TEST(ExactGreedyTest, Examples) {
  const SpannerParams vertex_k1_f1{1, 1, FaultMode::kVertex};
  EXPECT_EQ(ExactGreedy(Make(Family::kComplete, 3), vertex_k1_f1).spanner_edge_ids.size(), 3u);
  const Graph c4 = Make(Family::kCycle, 4);
  EXPECT_EQ(ExactGreedy(c4, {2, 1, FaultMode::kVertex}).spanner_edge_ids, AllIds(c4));
  const Graph star = Make(Family::kStar, 5);
  for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t f = 0; f <= 2; ++f) {
        EXPECT_EQ(ExactGreedy(star, {k, f, mode}).spanner_edge_ids, AllIds(star));
      }
    }
  }
}

TEST(ExactGreedyTest, GuardRefusesLargeInstances) {
  EXPECT_THROW(ExactGreedy(Make(Family::kPath, 15), {2, 1, FaultMode::kVertex}),
               GuardExceeded);
  EXPECT_THROW(ExactGreedy(Make(Family::kPath, 5), {2, 3, FaultMode::kVertex}),
               GuardExceeded);
  GreedyLimits wide;
  wide.exact_max_faults = 3;
  EXPECT_NO_THROW(ExactGreedy(Make(Family::kPath, 5), {2, 3, FaultMode::kVertex}, wide));
}

TEST(ExactGreedyTest, DisconnectedInputKeepsEveryEdge) {
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(ExactGreedy(g, {2, 0, FaultMode::kVertex}).spanner_edge_ids, AllIds(g));
}

TEST(ModifiedGreedyTest, Examples) {
  const Graph empty(5, {});
  EXPECT_TRUE(ModifiedGreedyUnweighted(empty, {2, 1, FaultMode::kVertex})
                  .spanner_edge_ids.empty());
  const Graph k3 = Make(Family::kComplete, 3);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    EXPECT_EQ(ModifiedGreedyUnweighted(k3, {1, 1, FaultMode::kVertex},
                                       RandomEdgeOrder(3, seed))
                  .spanner_edge_ids,
              AllIds(k3));
  }
  const Graph c4 = Make(Family::kCycle, 4);
  const SpannerResult r = ModifiedGreedyUnweighted(c4, {2, 1, FaultMode::kVertex});
  EXPECT_EQ(r.spanner_edge_ids, AllIds(c4));
  // The last edge sees the 3-hop detour first.
  EXPECT_EQ(r.stats.decisions.back().first_path_hops, 3u);
}

TEST(ModifiedGreedyTest, TreesKeepEverything) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // A random tree: vertex i attaches to a random earlier vertex.
    std::mt19937_64 rng(seed);
    std::vector<Graph::EdgeSpec> specs;
    for (Vertex v = 1; v < 12; ++v) {
      specs.push_back({static_cast<Vertex>(rng() % v), v, 1 + rng() % 9});
    }
    const Graph tree(12, specs);
    EXPECT_EQ(ModifiedGreedyWeighted(tree, {3, 2, FaultMode::kEdge}).spanner_edge_ids,
              AllIds(tree));
  }
}

TEST(ModifiedGreedyTest, WeightedTriangle) {
  const Graph g = WeightedTriangle();
  EXPECT_EQ(ModifiedGreedyWeighted(g, {2, 1, FaultMode::kVertex}).spanner_edge_ids,
            AllIds(g));
  const SpannerResult r = ModifiedGreedyWeighted(g, {2, 0, FaultMode::kVertex});
  EXPECT_EQ(r.spanner_edge_ids, (std::vector<EdgeId>{1, 2}));
  // Independent check: d_H(0,2) = 2 <= 3 * 3.
  EXPECT_TRUE(oracle::IsFtSpanner(oracle::FromGraph(g), {1, 2}, 2, 0, false));
}

TEST(ModifiedGreedyTest, RejectsBadInput) {
  EXPECT_THROW(ModifiedGreedyUnweighted(WeightedTriangle(), {2, 1, FaultMode::kVertex}),
               InvalidArgument);
  const Graph c4 = Make(Family::kCycle, 4);
  const std::vector<EdgeId> short_order = {0, 1, 2};
  EXPECT_THROW(ModifiedGreedyUnweighted(c4, {2, 1, FaultMode::kVertex}, short_order),
               InvalidArgument);
  const std::vector<EdgeId> repeated = {0, 1, 1, 2};
  EXPECT_THROW(ModifiedGreedyUnweighted(c4, {2, 1, FaultMode::kVertex}, repeated),
               InvalidArgument);
  EXPECT_THROW(ModifiedGreedyWeighted(c4, {0, 1, FaultMode::kVertex}), InvalidArgument);
  EXPECT_THROW(ModifiedGreedyWeighted(c4, {65, 1, FaultMode::kVertex}), GuardExceeded);
}

TEST(ModifiedGreedyTest, WeightOrderIsNondecreasingWithIdTies) {
  const Graph g = oracle::ToGraph(oracle::RandomPlain(10, 0.5, 4, 3));
  const SpannerResult r = ModifiedGreedyWeighted(g, {2, 1, FaultMode::kVertex});
  const auto& order = r.stats.edge_order;
  ASSERT_EQ(order.size(), g.num_edges());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Edge& a = g.edge(order[i - 1]);
    const Edge& b = g.edge(order[i]);
    EXPECT_TRUE(a.w < b.w || (a.w == b.w && a.id < b.id));
  }
}

// Every construction, on random graphs in both modes, passes the
// definition-level oracle.
TEST(GreedyOracleTest, AllConstructionsAreFaultTolerantSpanners) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto n = static_cast<std::uint32_t>(5 + seed % 3);
    const oracle::Plain weighted = oracle::RandomPlain(n, 0.55, 6, seed);
    oracle::Plain unit = weighted;
    for (auto& e : unit.edges) e.w = 1;
    const Graph gw = oracle::ToGraph(weighted);
    const Graph gu = oracle::ToGraph(unit);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t f = 0; f <= 2; ++f) {
        for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
          const SpannerParams p{k, f, mode};
          const bool em = mode == FaultMode::kEdge;
          EXPECT_TRUE(oracle::IsFtSpanner(weighted, ExactGreedy(gw, p).spanner_edge_ids, k, f, em))
              << "exact seed " << seed;
          EXPECT_TRUE(oracle::IsFtSpanner(weighted, ModifiedGreedyWeighted(gw, p).spanner_edge_ids, k, f, em))
              << "weighted seed " << seed;
          EXPECT_TRUE(oracle::IsFtSpanner(unit, ModifiedGreedyUnweighted(gu, p).spanner_edge_ids, k, f, em))
              << "unweighted seed " << seed;
        }
      }
    }
  }
}

// Different arbitrary orders give possibly different spanners, all valid.
TEST(GreedyOracleTest, AnyOrderIsValid) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    oracle::Plain unit = oracle::RandomPlain(7, 0.6, 1, 50 + seed);
    const Graph g = oracle::ToGraph(unit);
    for (std::uint64_t perm = 0; perm < 10; ++perm) {
      const auto order = RandomEdgeOrder(g.num_edges(), perm);
      for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
        const SpannerResult r = ModifiedGreedyUnweighted(g, {2, 1, mode}, order);
        EXPECT_EQ(r.stats.edge_order, order);
        EXPECT_TRUE(oracle::IsFtSpanner(unit, r.spanner_edge_ids, 2, 1,
                                        mode == FaultMode::kEdge));
      }
    }
  }
}

// An edge whose endpoints some fault set of size <= f disconnects once the
// edge itself is gone must be kept.
TEST(GreedyOracleTest, KeepsEdgesThatFaultsWouldIsolate) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const oracle::Plain plain = oracle::RandomPlain(7, 0.4, 5, 300 + seed);
    const Graph g = oracle::ToGraph(plain);
    for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
      const bool em = mode == FaultMode::kEdge;
      for (std::uint32_t f = 0; f <= 2; ++f) {
        const auto kept = ModifiedGreedyWeighted(g, {2, f, mode}).spanner_edge_ids;
        for (EdgeId id = 0; id < plain.edges.size(); ++id) {
          const auto [u, v, w] = plain.edges[id];
          bool forced = false;
          const std::uint32_t universe = em ? plain.edges.size() : plain.n;
          oracle::ForEachSubset(universe, f, [&](const std::vector<std::uint32_t>& fs) {
            std::vector<bool> keep(plain.edges.size(), true);
            std::vector<bool> dead(plain.n, false);
            keep[id] = false;
            for (std::uint32_t x : fs) {
              if (em) {
                keep[x] = false;
              } else if (x != u && x != v) {
                dead[x] = true;
              }
            }
            if (oracle::AllPairs(plain, keep, dead)[u][v] == oracle::kInf) forced = true;
          });
          if (forced) {
            EXPECT_TRUE(std::binary_search(kept.begin(), kept.end(), id))
                << "seed " << seed << " edge " << id;
          }
        }
      }
    }
  }
}

// With f = 0 every dropped edge had a short path in H when considered,
// and the unweighted output has girth above 2k.
TEST(GreedyOracleTest, FaultFreeCaseIsClassicGreedy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const oracle::Plain unit = oracle::RandomPlain(9, 0.5, 1, 900 + seed);
    const Graph g = oracle::ToGraph(unit);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const SpannerResult r = ModifiedGreedyUnweighted(g, {k, 0, FaultMode::kVertex});
      for (const EdgeDecision& d : r.stats.decisions) {
        if (!d.kept) {
          EXPECT_GE(d.first_path_hops, 1u);
          EXPECT_LE(d.first_path_hops, 2 * k - 1);
        }
      }
      oracle::Plain h;
      h.n = unit.n;
      for (EdgeId id : r.spanner_edge_ids) h.edges.push_back(unit.edges[id]);
      const auto girth = oracle::Girth(h);
      if (girth) {
        EXPECT_GT(*girth, 2 * k);
      }
    }
  }
}

TEST(GreedyStatsTest, BfsAccounting) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::ToGraph(oracle::RandomPlain(20, 0.3, 10, seed));
    for (std::uint32_t f = 0; f <= 3; ++f) {
      const SpannerResult r = ModifiedGreedyWeighted(g, {2, f, FaultMode::kVertex});
      EXPECT_EQ(r.stats.lbc_calls, g.num_edges());
      EXPECT_LE(r.stats.bfs_runs, g.num_edges() * (f + 1));
      EXPECT_EQ(r.stats.edges_kept, r.spanner_edge_ids.size());
      EXPECT_TRUE(std::is_sorted(r.spanner_edge_ids.begin(), r.spanner_edge_ids.end()));
    }
  }
}

TEST(RandomEdgeOrderTest, IsAReproduciblePermutation) {
  const auto a = RandomEdgeOrder(50, 9);
  EXPECT_EQ(a, RandomEdgeOrder(50, 9));
  EXPECT_NE(a, RandomEdgeOrder(50, 10));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

}  // namespace
}  // namespace ftspanner
