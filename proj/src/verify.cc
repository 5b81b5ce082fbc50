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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "ftspanner/errors.h"

namespace ftspanner {

std::uint64_t CountFaultSets(std::uint64_t universe, std::uint32_t f) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(universe, i)
  for (std::uint64_t i = 0; i <= f && i <= universe; ++i) {
    if (i > 0) {
      // binom * (universe - i + 1) / i, exact since C(n,i-1)*(n-i+1) is
      // divisible by i.
      const std::uint64_t mult = universe - i + 1;
      if (binom > kMax / mult) return kMax;
      binom = binom * mult / i;
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

namespace {

// Calls `visit` on every fault set of size <= f over [0, universe), by size
// then lexicographically, until it returns false.
void ForEachFaultSet(std::uint32_t universe, std::uint32_t f,
                     const std::function<bool(std::span<const std::uint32_t>)>&
                         visit) {
  std::vector<std::uint32_t> pick;
  for (std::uint32_t size = 0; size <= f && size <= universe; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0u);
    while (true) {
      if (!visit(pick)) return;
      std::uint32_t i = size;
      while (i > 0 && pick[i - 1] == universe - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::uint32_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

void CheckInputs(const Graph& g, std::span<const EdgeId> h,
                 const SpannerParams& p, const VerifyLimits& limits) {
  if (p.k == 0) throw InvalidArgument("k must be at least 1");
  for (EdgeId id : h) {
    if (id >= g.num_edges()) {
      throw InvalidArgument("spanner edge id " + std::to_string(id) +
                            " is not an edge of the graph");
    }
  }
  const std::uint64_t universe =
      p.mode == FaultMode::kVertex ? g.num_vertices() : g.num_edges();
  const std::uint64_t sets = CountFaultSets(universe, p.f);
  if (sets > limits.max_fault_sets) {
    throw GuardExceeded("verification needs " + std::to_string(sets) +
                        " fault sets, above the cap of " +
                        std::to_string(limits.max_fault_sets));
  }
}

// Lazily computed single-source distances for one fault set.
class DistanceCache {
 public:
  DistanceCache(const GraphView& g, const FaultMask& mask)
      : g_(g), mask_(mask), rows_(g.num_vertices()) {}

  Weight Get(Vertex s, Vertex t) {
    auto& row = rows_[s];
    if (row.empty()) row = DistancesFrom(g_, s, mask_);
    return row[t];
  }

 private:
  GraphView g_;
  const FaultMask& mask_;
  std::vector<std::vector<Weight>> rows_;
};

template <typename CheckFn>
VerifyReport Enumerate(const Graph& g, std::span<const EdgeId> h,
                       const SpannerParams& p, CheckFn check) {
  const Subgraph spanner(g, h);
  const std::uint32_t universe = static_cast<std::uint32_t>(
      p.mode == FaultMode::kVertex ? g.num_vertices() : g.num_edges());
  FaultMask mask(p.mode, g.num_vertices(), g.num_edges());
  VerifyReport report;
  ForEachFaultSet(universe, p.f, [&](std::span<const std::uint32_t> members) {
    ++report.fault_sets_checked;
    mask.clear();
    for (std::uint32_t x : members) mask.block(x);
    DistanceCache in_g(g.view(), mask);
    DistanceCache in_h(spanner.view(), mask);
    auto failure = check(spanner, mask, in_g, in_h);
    if (failure) {
      failure->fault_set =
          FaultSet(p.mode, std::vector<std::uint32_t>(members.begin(),
                                                      members.end()));
      report.valid = false;
      report.counterexample = std::move(failure);
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace

VerifyReport VerifyFtSpanner(const Graph& g, std::span<const EdgeId> h,
                             const SpannerParams& p,
                             const VerifyLimits& limits) {
  CheckInputs(g, h, p, limits);
  const Weight stretch = p.stretch();
  return Enumerate(
      g, h, p,
      [&](const Subgraph& spanner, const FaultMask& mask, DistanceCache& in_g,
          DistanceCache& in_h) -> std::optional<Counterexample> {
        for (const Edge& e : g.edges()) {
          if (mask.blocks_vertex(e.u) || mask.blocks_vertex(e.v) ||
              mask.blocks_edge(e.id) || spanner.contains(e.id)) {
            continue;
          }
          if (in_g.Get(e.u, e.v) != e.w) continue;
          const Weight required = SaturatingMul(stretch, e.w);
          const Weight got = in_h.Get(e.u, e.v);
          if (got > required) {
            return Counterexample{FaultSet(p.mode), e.u, e.v, got, required};
          }
        }
        return std::nullopt;
      });
}

VerifyReport VerifyByDefinition(const Graph& g, std::span<const EdgeId> h,
                                const SpannerParams& p,
                                const VerifyLimits& limits) {
  CheckInputs(g, h, p, limits);
  const Weight stretch = p.stretch();
  const auto n = static_cast<Vertex>(g.num_vertices());
  return Enumerate(
      g, h, p,
      [&](const Subgraph&, const FaultMask& mask, DistanceCache& in_g,
          DistanceCache& in_h) -> std::optional<Counterexample> {
        for (Vertex x = 0; x < n; ++x) {
          if (mask.blocks_vertex(x)) continue;
          for (Vertex y = x + 1; y < n; ++y) {
            if (mask.blocks_vertex(y)) continue;
            const Weight base = in_g.Get(x, y);
            if (base == kInfinity) continue;
            const Weight required = SaturatingMul(stretch, base);
            const Weight got = in_h.Get(x, y);
            if (got > required) {
              return Counterexample{FaultSet(p.mode), x, y, got, required};
            }
          }
        }
        return std::nullopt;
      });
}

std::optional<std::vector<Vertex>> GirthAtMost(const Graph& g,
                                               std::uint32_t bound) {
  if (bound < 3) throw InvalidArgument("girth bound must be at least 3");
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> depth(n);
  std::vector<Vertex> parent(n);
  std::vector<EdgeId> parent_edge(n);
  std::vector<Vertex> queue;

  auto bfs = [&](Vertex root, std::uint32_t best,
                 std::pair<Vertex, Vertex>* closing) -> std::uint32_t {
    std::fill(depth.begin(), depth.end(), kUnseen);
    queue.clear();
    queue.push_back(root);
    depth[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      // Any cycle closed from here is at least 2*depth+1 long.
      if (2 * depth[x] + 1 >= best) break;
      for (const Incidence& inc : g.neighbors(x)) {
        if (x != root && inc.edge == parent_edge[x]) continue;
        if (depth[inc.to] == kUnseen) {
          depth[inc.to] = depth[x] + 1;
          parent[inc.to] = x;
          parent_edge[inc.to] = inc.edge;
          queue.push_back(inc.to);
        } else {
          const std::uint32_t len = depth[x] + depth[inc.to] + 1;
          if (len < best) {
            best = len;
            *closing = {x, inc.to};
          }
        }
      }
    }
    return best;
  };

  std::uint32_t best = kUnseen;
  Vertex best_root = 0;
  std::pair<Vertex, Vertex> best_closing{0, 0};
  for (Vertex r = 0; r < n; ++r) {
    std::pair<Vertex, Vertex> closing;
    const std::uint32_t len = bfs(r, best, &closing);
    if (len < best) {
      best = len;
      best_root = r;
      best_closing = closing;
    }
  }
  if (best == kUnseen || best > bound) return std::nullopt;

  // Rebuild the tree of the winning root and join the two tree paths at
  // their lowest common ancestor.
  std::pair<Vertex, Vertex> closing;
  bfs(best_root, best + 1, &closing);
  auto [x, y] = best_closing;
  std::vector<Vertex> left{x};
  std::vector<Vertex> right{y};
  while (x != y) {
    if (depth[x] >= depth[y]) {
      x = parent[x];
      left.push_back(x);
    } else {
      y = parent[y];
      right.push_back(y);
    }
  }
  right.pop_back();
  std::reverse(right.begin(), right.end());
  std::vector<Vertex> cycle;
  cycle.insert(cycle.end(), right.begin(), right.end());
  cycle.insert(cycle.end(), left.begin(), left.end());
  return cycle;
}

double SpannerSizeBound(std::size_t n, std::uint32_t k, std::uint32_t f) {
  const double inv_k = 1.0 / static_cast<double>(k);
  const double dense = std::pow(static_cast<double>(n), 1.0 + inv_k);
  if (f == 0) return dense;
  return static_cast<double>(k) * std::pow(static_cast<double>(f), 1.0 - inv_k) *
         dense;
}

SizeAudit AuditSize(std::size_t num_vertices, std::size_t spanner_edges,
                    const SpannerParams& p) {
  if (p.k == 0) throw InvalidArgument("k must be at least 1");
  SizeAudit audit;
  audit.edges = spanner_edges;
  audit.bound_value = SpannerSizeBound(num_vertices, p.k, p.f);
  audit.fault_free_bound = p.f == 0;
  audit.ratio = audit.bound_value > 0
                    ? static_cast<double>(spanner_edges) / audit.bound_value
                    : 0.0;
  return audit;
}

}  // namespace ftspanner
