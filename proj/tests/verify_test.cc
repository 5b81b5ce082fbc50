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


#include "ftspanner/verify.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ftspanner/errors.h"
#include "ftspanner/gen.h"
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

TEST(VerifyTest, FullGraphIsAlwaysValid) {
  const Graph g = oracle::ToGraph(oracle::RandomPlain(8, 0.5, 7, 1));
  for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
    const VerifyReport r = VerifyFtSpanner(g, AllIds(g), {2, 2, mode});
    EXPECT_TRUE(r.valid);
    EXPECT_FALSE(r.counterexample.has_value());
  }
}

TEST(VerifyTest, CycleMinusEdgeFailsUnderOneFault) {
  const Graph c4 = Make(Family::kCycle, 4);  // edges 0-1, 1-2, 2-3, 3-0
  const std::vector<EdgeId> h = {0, 1, 2};   // drop {0,3}
  const VerifyReport r = VerifyFtSpanner(c4, h, {2, 1, FaultMode::kVertex});
  ASSERT_FALSE(r.valid);
  ASSERT_TRUE(r.counterexample.has_value());
  const Counterexample& c = *r.counterexample;
  EXPECT_EQ(std::min(c.u, c.v), 0u);
  EXPECT_EQ(std::max(c.u, c.v), 3u);
  ASSERT_EQ(c.fault_set.size(), 1u);
  const Vertex faulted = c.fault_set.members()[0];
  EXPECT_TRUE(faulted == 1 || faulted == 2);
  EXPECT_EQ(c.spanner_dist, kInfinity);
  EXPECT_EQ(c.required, 3u);
  // Independent oracle agrees the set is not fault tolerant.
  EXPECT_FALSE(oracle::IsFtSpanner(oracle::FromGraph(c4), h, 2, 1, false));
}

TEST(VerifyTest, SpanningStarOfK4FailsAtCenter) {
  const Graph k4 = Make(Family::kComplete, 4);
  std::vector<EdgeId> star;
  for (Vertex v = 1; v < 4; ++v) star.push_back(*k4.find_edge(0, v));
  const VerifyReport r = VerifyFtSpanner(k4, star, {2, 1, FaultMode::kVertex});
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.counterexample->fault_set, FaultSet::Vertices({0}));
  EXPECT_GT(r.counterexample->spanner_dist, r.counterexample->required);
}

TEST(VerifyTest, RejectsForeignEdgesAndEnforcesGuard) {
  const Graph g = Make(Family::kComplete, 6);
  const std::vector<EdgeId> bad = {99};
  EXPECT_THROW(VerifyFtSpanner(g, bad, {2, 1, FaultMode::kVertex}), InvalidArgument);
  VerifyLimits tight;
  tight.max_fault_sets = 10;
  EXPECT_THROW(VerifyFtSpanner(g, AllIds(g), {2, 2, FaultMode::kEdge}, tight),
               GuardExceeded);
  EXPECT_EQ(CountFaultSets(6, 2), 1u + 6u + 15u);
  EXPECT_EQ(CountFaultSets(15, 0), 1u);
}

// The edge-endpoint verifier, the all-pairs verifier and the independent
// Floyd-Warshall oracle agree on random subsets of small graphs.
TEST(VerifyTest, EdgeReductionMatchesDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::uint32_t>(3 + rng() % 5);
    const oracle::Plain plain = oracle::RandomPlain(n, 0.6, 1 + rng() % 5, rng());
    const Graph g = oracle::ToGraph(plain);
    std::vector<EdgeId> h;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (rng() % 4 != 0) h.push_back(id);
    }
    const auto k = static_cast<std::uint32_t>(1 + rng() % 3);
    const auto f = static_cast<std::uint32_t>(rng() % 3);
    for (const FaultMode mode : {FaultMode::kVertex, FaultMode::kEdge}) {
      const SpannerParams p{k, f, mode};
      const VerifyReport fast = VerifyFtSpanner(g, h, p);
      const VerifyReport slow = VerifyByDefinition(g, h, p);
      const bool want = oracle::IsFtSpanner(plain, h, k, f, mode == FaultMode::kEdge);
      EXPECT_EQ(fast.valid, want) << trial;
      EXPECT_EQ(slow.valid, want) << trial;
      if (!fast.valid) {
        const Counterexample& c = *fast.counterexample;
        EXPECT_GT(c.spanner_dist, c.required);
        EXPECT_LE(c.fault_set.size(), f);
        EXPECT_EQ(c.fault_set.mode(), mode);
        EXPECT_TRUE(g.find_edge(c.u, c.v).has_value());
      }
    }
  }
}

TEST(VerifyTest, ReportIsDeterministic) {
  const Graph g = Make(Family::kComplete, 6);
  const std::vector<EdgeId> h = {0, 1, 2, 3, 4};
  const VerifyReport a = VerifyFtSpanner(g, h, {2, 2, FaultMode::kVertex});
  const VerifyReport b = VerifyFtSpanner(g, h, {2, 2, FaultMode::kVertex});
  ASSERT_FALSE(a.valid);
  EXPECT_EQ(a.counterexample->fault_set, b.counterexample->fault_set);
  EXPECT_EQ(a.counterexample->u, b.counterexample->u);
  EXPECT_EQ(a.counterexample->v, b.counterexample->v);
  EXPECT_EQ(a.fault_sets_checked, b.fault_sets_checked);
}

TEST(GirthTest, Examples) {
  EXPECT_FALSE(GirthAtMost(Make(Family::kPath, 7), 7).has_value());
  const Graph c5 = Make(Family::kCycle, 5);
  const auto cycle = GirthAtMost(c5, 5);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->size(), 5u);
  EXPECT_FALSE(GirthAtMost(c5, 4).has_value());
  EXPECT_THROW(GirthAtMost(c5, 2), InvalidArgument);
}

TEST(GirthTest, MatchesCycleEnumeration) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const oracle::Plain plain = oracle::RandomPlain(8, 0.15 + 0.05 * (seed % 6), 1, seed);
    const Graph g = oracle::ToGraph(plain);
    const auto want = oracle::Girth(plain);
    for (std::uint32_t bound = 3; bound <= 8; ++bound) {
      const auto got = GirthAtMost(g, bound);
      ASSERT_EQ(got.has_value(), want.has_value() && *want <= bound) << seed;
      if (!got) continue;
      EXPECT_EQ(got->size(), *want);
      // A genuine simple cycle of g.
      std::vector<Vertex> sorted = *got;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t i = 0; i < got->size(); ++i) {
        EXPECT_TRUE(g.find_edge((*got)[i], (*got)[(i + 1) % got->size()]).has_value());
      }
    }
  }
}

TEST(SizeAuditTest, Arithmetic) {
  const SizeAudit a = AuditSize(16, 64, {2, 1, FaultMode::kVertex});
  EXPECT_DOUBLE_EQ(a.bound_value, 128.0);
  EXPECT_DOUBLE_EQ(a.ratio, 0.5);
  EXPECT_FALSE(a.fault_free_bound);
  const SizeAudit b = AuditSize(16, 120, {1, 4, FaultMode::kVertex});
  EXPECT_DOUBLE_EQ(b.bound_value, 256.0);
  EXPECT_DOUBLE_EQ(b.ratio, 0.46875);
  EXPECT_DOUBLE_EQ(AuditSize(16, 0, {2, 3, FaultMode::kEdge}).ratio, 0.0);
  const SizeAudit c = AuditSize(16, 32, {2, 0, FaultMode::kVertex});
  EXPECT_TRUE(c.fault_free_bound);
  EXPECT_DOUBLE_EQ(c.bound_value, 64.0);
  // k * f^{1-1/k} * n^{1+1/k} for a non-integral case.
  EXPECT_NEAR(SpannerSizeBound(100, 3, 8), 3 * 4.0 * std::pow(100.0, 4.0 / 3), 1e-6);
}

}  // namespace
}  // namespace ftspanner
