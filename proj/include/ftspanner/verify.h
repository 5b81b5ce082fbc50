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

// Brute-force ground truth for fault-tolerant spanners.

#ifndef FTSPANNER_VERIFY_H_
#define FTSPANNER_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ftspanner/graph.h"
#include "ftspanner/greedy.h"

namespace ftspanner {

struct VerifyLimits {
  // Cap on the number of fault sets enumerated (all sets of size <= f).
  std::uint64_t max_fault_sets = 2'000'000;
};

struct Counterexample {
  FaultSet fault_set;
  Vertex u = 0;
  Vertex v = 0;
  Weight spanner_dist = 0;  // d_{H\F}(u,v)
  Weight required = 0;      // (2k-1) * d_{G\F}(u,v)
};

struct VerifyReport {
  bool valid = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t fault_sets_checked = 0;
};

// Number of subsets of a `universe`-element set with at most `f` elements,
// saturating at UINT64_MAX.
std::uint64_t CountFaultSets(std::uint64_t universe, std::uint32_t f);

// Checks d_{H\F}(u,v) <= (2k-1) w(u,v) for every fault set F with |F| <= f
// and every surviving edge {u,v} of g with d_{G\F}(u,v) = w(u,v), which is
// equivalent to the all-pairs definition. Fault sets are visited by size
// and then lexicographically, edges by id; the first failure is reported.
// Throws GuardExceeded past limits.max_fault_sets and InvalidArgument if
// `h` names an edge id outside g.
VerifyReport VerifyFtSpanner(const Graph& g, std::span<const EdgeId> h,
                             const SpannerParams& p,
                             const VerifyLimits& limits = {});

// The all-pairs form: d_{H\F}(x,y) <= (2k-1) d_{G\F}(x,y) for every F and
// every surviving pair. Slow; kept to cross-check VerifyFtSpanner.
VerifyReport VerifyByDefinition(const Graph& g, std::span<const EdgeId> h,
                                const SpannerParams& p,
                                const VerifyLimits& limits = {});

// A simple cycle with at most `bound` vertices, or nullopt. The cycle
// returned is a shortest one. Throws InvalidArgument if bound < 3.
std::optional<std::vector<Vertex>> GirthAtMost(const Graph& g,
                                               std::uint32_t bound);

struct SizeAudit {
  std::size_t edges = 0;
  double bound_value = 0;
  double ratio = 0;
  // True when f == 0 and the fault-free bound n^{1+1/k} was used.
  bool fault_free_bound = false;
};

// k * f^{1-1/k} * n^{1+1/k}, or n^{1+1/k} when f == 0.
double SpannerSizeBound(std::size_t n, std::uint32_t k, std::uint32_t f);

SizeAudit AuditSize(std::size_t num_vertices, std::size_t spanner_edges,
                    const SpannerParams& p);

}  // namespace ftspanner

#endif  // FTSPANNER_VERIFY_H_
