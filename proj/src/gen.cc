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

#include "ftspanner/gen.h"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ftspanner/errors.h"
#include "ftspanner/random.h"

namespace ftspanner {
namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::kComplete, "complete"},
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
    {Family::kStar, "star"},
    {Family::kGrid, "grid"},
    {Family::kErdosRenyi, "erdos-renyi"},
    {Family::kRandomGeometric, "random-geometric"},
    {Family::kTheta, "theta"},
};

using EdgeSpecs = std::vector<Graph::EdgeSpec>;

std::size_t Structure(const GenSpec& spec, Rng& rng, EdgeSpecs& edges) {
  const std::size_t n = spec.n;
  auto add = [&](std::size_t u, std::size_t v) {
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1});
  };
  switch (spec.family) {
    case Family::kComplete:
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) add(u, v);
      }
      return n;
    case Family::kCycle:
      if (n < 3) throw InvalidArgument("a cycle needs n >= 3");
      for (std::size_t u = 0; u < n; ++u) add(u, (u + 1) % n);
      return n;
    case Family::kPath:
      for (std::size_t u = 0; u + 1 < n; ++u) add(u, u + 1);
      return n;
    case Family::kStar:
      for (std::size_t v = 1; v < n; ++v) add(0, v);
      return n;
    case Family::kGrid: {
      const auto width = static_cast<std::size_t>(
          std::ceil(std::sqrt(static_cast<double>(n))));
      for (std::size_t x = 0; x < n; ++x) {
        if ((x + 1) % width != 0 && x + 1 < n) add(x, x + 1);
        if (x + width < n) add(x, x + width);
      }
      return n;
    }
    case Family::kErdosRenyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw InvalidArgument("edge probability must lie in [0, 1]");
      }
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (rng.Bernoulli(spec.p)) add(u, v);
        }
      }
      return n;
    case Family::kRandomGeometric: {
      if (!(spec.radius >= 0.0)) {
        throw InvalidArgument("radius must be nonnegative");
      }
      std::vector<double> xs(n);
      std::vector<double> ys(n);
      for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.Uniform01();
        ys[i] = rng.Uniform01();
      }
      const double r2 = spec.radius * spec.radius;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          const double dx = xs[u] - xs[v];
          const double dy = ys[u] - ys[v];
          if (dx * dx + dy * dy <= r2) add(u, v);
        }
      }
      return n;
    }
    case Family::kTheta: {
      if (spec.hops == 0) throw InvalidArgument("theta needs hops >= 1");
      if (spec.hops == 1 && spec.paths > 1) {
        throw InvalidArgument("theta with hops == 1 allows a single path");
      }
      std::size_t next = 2;
      for (std::uint32_t p = 0; p < spec.paths; ++p) {
        std::size_t prev = 0;
        for (std::uint32_t h = 1; h < spec.hops; ++h) {
          add(prev, next);
          prev = next++;
        }
        add(prev, 1);
      }
      return next;
    }
  }
  throw InvalidArgument("unknown family");
}

// Component of each vertex, then the vertices of the largest component in
// ascending order.
std::vector<Vertex> LargestComponent(std::size_t n, const EdgeSpecs& edges) {
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : edges) {
    std::size_t a = find(e.u);
    std::size_t b = find(e.v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> size(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++size[find(x)];
  std::size_t best = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (size[x] > size[best]) best = x;
  }
  std::vector<Vertex> keep;
  for (std::size_t x = 0; x < n; ++x) {
    if (find(x) == best) keep.push_back(static_cast<Vertex>(x));
  }
  return keep;
}

}  // namespace

std::string_view ToString(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family ParseFamily(std::string_view text) {
  for (const auto& [f, name] : kFamilyNames) {
    if (name == text) return f;
  }
  throw InvalidArgument("unknown graph family '" + std::string(text) + "'");
}

Graph Generate(const GenSpec& spec) {
  if (spec.weights.kind == WeightModel::Kind::kUniformInt &&
      spec.weights.lo > spec.weights.hi) {
    throw InvalidArgument("weight range has lo > hi");
  }
  Rng structure_rng(DeriveSeed(spec.seed, {1}));
  EdgeSpecs edges;
  std::size_t n = Structure(spec, structure_rng, edges);

  if (spec.weights.kind == WeightModel::Kind::kUniformInt) {
    Rng weight_rng(DeriveSeed(spec.seed, {2}));
    for (auto& e : edges) {
      e.w = weight_rng.UniformInt(spec.weights.lo, spec.weights.hi);
    }
  }

  if (spec.largest_component && n > 0) {
    const std::vector<Vertex> keep = LargestComponent(n, edges);
    std::vector<Vertex> relabel(n, static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      relabel[keep[i]] = static_cast<Vertex>(i);
    }
    EdgeSpecs kept;
    for (const auto& e : edges) {
      if (relabel[e.u] != static_cast<Vertex>(-1)) {
        kept.push_back({relabel[e.u], relabel[e.v], e.w});
      }
    }
    edges.swap(kept);
    n = keep.size();
  }
  return Graph(n, edges);
}

}  // namespace ftspanner
