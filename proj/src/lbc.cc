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

#include "ftspanner/lbc.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ftspanner/errors.h"

namespace ftspanner {
namespace {

void Validate(const LbcInstance& inst) {
  const std::size_t n = inst.graph.num_vertices();
  if (inst.u >= n || inst.v >= n) {
    throw InvalidArgument("terminal out of range");
  }
  if (inst.u == inst.v) throw InvalidArgument("terminals must differ");
  if (inst.t == 0) throw InvalidArgument("hop bound t must be positive");
}

std::size_t NumEdges(const GraphView& g) { return g.edges->size(); }

}  // namespace

LbcVerdict LbcGapDecide(const LbcInstance& inst) {
  HopBoundedSearch search;
  return LbcGapDecide(inst, search);
}

LbcVerdict LbcGapDecide(const LbcInstance& inst, HopBoundedSearch& search) {
  Validate(inst);
  FaultMask mask(inst.mode, inst.graph.num_vertices(), NumEdges(inst.graph));
  FaultSet accumulated(inst.mode);
  LbcVerdict verdict;
  for (std::uint32_t i = 0; i <= inst.alpha; ++i) {
    ++verdict.iterations_used;
    auto path = search.Find(inst.graph, inst.u, inst.v, inst.t, mask);
    if (!path) {
      verdict.answer = LbcAnswer::kYes;
      verdict.witness_cut = std::move(accumulated);
      return verdict;
    }
    if (i == 0) {
      verdict.first_path_hops = static_cast<std::uint32_t>(path->hops());
    }
    if (inst.mode == FaultMode::kVertex) {
      // Interior vertices only; a one-hop path contributes nothing.
      for (std::size_t j = 1; j + 1 < path->vertices.size(); ++j) {
        mask.block(path->vertices[j]);
        accumulated.insert(path->vertices[j]);
      }
    } else {
      for (EdgeId e : path->edges) {
        mask.block(e);
        accumulated.insert(e);
      }
    }
  }
  verdict.answer = LbcAnswer::kNo;
  return verdict;
}

LbcExactResult LbcExact(const LbcInstance& inst, std::size_t max_candidates) {
  Validate(inst);
  const GraphView& g = inst.graph;
  std::vector<std::uint32_t> candidates;
  if (inst.mode == FaultMode::kVertex) {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (x != inst.u && x != inst.v) candidates.push_back(x);
    }
  } else {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      for (const Incidence& inc : g.neighbors(x)) {
        if (x < inc.to) candidates.push_back(inc.edge);
      }
    }
    std::sort(candidates.begin(), candidates.end());
  }
  if (candidates.size() > max_candidates) {
    throw GuardExceeded("length-bounded cut enumeration over " +
                        std::to_string(candidates.size()) +
                        " candidates exceeds the cap of " +
                        std::to_string(max_candidates));
  }

  HopBoundedSearch search;
  FaultMask mask(inst.mode, g.num_vertices(), NumEdges(g));
  const std::size_t c = candidates.size();
  for (std::size_t size = 0; size <= c; ++size) {
    // Lexicographic enumeration of size-element index combinations.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      mask.clear();
      for (std::size_t i : pick) mask.block(candidates[i]);
      if (!search.Find(g, inst.u, inst.v, inst.t, mask)) {
        std::vector<std::uint32_t> members;
        for (std::size_t i : pick) members.push_back(candidates[i]);
        return {size, FaultSet(inst.mode, std::move(members))};
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == c - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {std::nullopt, std::nullopt};
}

}  // namespace ftspanner
