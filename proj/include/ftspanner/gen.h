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

// Seeded graph generators. The same GenSpec always yields the same graph.

#ifndef FTSPANNER_GEN_H_
#define FTSPANNER_GEN_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ftspanner/graph.h"

namespace ftspanner {

enum class Family {
  kComplete,
  kCycle,
  kPath,
  kStar,             // vertex 0 is the center
  kGrid,             // row-major, width ceil(sqrt(n))
  kErdosRenyi,       // uses `p`
  kRandomGeometric,  // unit square, uses `radius`
  kTheta,            // uses `paths` and `hops`; `n` is ignored
};

std::string_view ToString(Family family);
Family ParseFamily(std::string_view text);

struct WeightModel {
  enum class Kind { kUnit, kUniformInt };
  Kind kind = Kind::kUnit;
  Weight lo = 1;
  Weight hi = 1;

  static WeightModel Unit() { return {}; }
  static WeightModel UniformInt(Weight lo, Weight hi) {
    return {Kind::kUniformInt, lo, hi};
  }
};

struct GenSpec {
  Family family = Family::kPath;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  double radius = 0.0;
  std::uint32_t paths = 0;
  std::uint32_t hops = 0;
  WeightModel weights;
  // Keep only the largest connected component, relabeled in order of the
  // original vertex ids (ties go to the component with the smallest
  // vertex).
  bool largest_component = false;
};

// Theta: terminals 0 and 1 joined by `paths` internally disjoint paths of
// `hops` edges each, interior vertices numbered path by path.
//
// Throws InvalidArgument for p or radius outside [0, 1] / [0, inf), a
// cycle with n < 3, a theta with hops == 0 or with several one-hop paths,
// or lo > hi.
Graph Generate(const GenSpec& spec);

}  // namespace ftspanner

#endif  // FTSPANNER_GEN_H_
