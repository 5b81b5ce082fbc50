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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "ftspanner/distsim.h"
#include "ftspanner/errors.h"
#include "ftspanner/random.h"

namespace ftspanner {

double Log2N(std::size_t n) {
  return std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 1))));
}

std::uint64_t EffectiveWordBits(const SimConfig& cfg, std::size_t n) {
  if (cfg.max_rounds == 0) throw InvalidArgument("max_rounds must be positive");
  const std::uint64_t id_bits =
      static_cast<std::uint64_t>(std::ceil(std::log2(std::max<double>(n, 2))));
  if (cfg.word_bits != 0) {
    if (cfg.word_bits < id_bits) {
      throw InvalidArgument("word_bits " + std::to_string(cfg.word_bits) +
                            " is below ceil(log2 n) = " +
                            std::to_string(id_bits));
    }
    return cfg.word_bits;
  }
  const auto floor_bits = static_cast<std::uint64_t>(
      std::ceil(std::log2(std::max<double>(static_cast<double>(n), 16.0))));
  return std::uint64_t{cfg.word_factor} * floor_bits;
}

namespace {

// Shifts are fixed point with 20 fractional bits so that cluster choice is
// an exact integer comparison.
constexpr std::uint64_t kScale = std::uint64_t{1} << 20;

struct Offer {
  std::uint64_t key;
  Vertex center;
  Vertex via;
  std::uint32_t depth;

  bool operator<(const Offer& o) const {
    return std::tie(key, center, via) < std::tie(o.key, o.center, o.via);
  }
};

}  // namespace

DecompositionResult PaddedDecomposition(const Graph& g, const SimConfig& cfg) {
  const std::size_t n = g.num_vertices();
  EffectiveWordBits(cfg, n);
  RoundEngine engine(g, Model::kLocal, kLocalMessageBitCap, cfg.max_rounds);
  DecompositionResult result;
  ClusterDecomposition& d = result.decomposition;
  if (n == 0) {
    result.trace = engine.trace();
    return result;
  }
  const double log_n = Log2N(n);
  const auto ell =
      static_cast<std::uint32_t>(std::ceil(cfg.partition_factor * log_n));
  const double cap = cfg.shift_cap_factor * log_n;
  const auto cap_fixed = static_cast<std::uint64_t>(std::llround(cap * kScale));

  // start[i][v]: the time at which v opens its own cluster in partition i.
  std::vector<std::vector<std::uint64_t>> start(ell, std::vector<std::uint64_t>(n));
  for (std::uint32_t i = 0; i < ell; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      Rng rng(DeriveSeed(cfg.seed, {0xDEC0, i, v}));
      const double shift = std::min(rng.Exponential(cfg.shift_rate), cap);
      start[i][v] =
          cap_fixed - std::min<std::uint64_t>(
                          cap_fixed,
                          static_cast<std::uint64_t>(std::llround(shift * kScale)));
    }
  }

  constexpr Vertex kNone = ~Vertex{0};
  std::vector<std::vector<Vertex>> center(ell, std::vector<Vertex>(n, kNone));
  std::vector<std::vector<std::uint32_t>> depth(ell, std::vector<std::uint32_t>(n, 0));
  d.tree_parent.assign(ell, std::vector<Vertex>(n, kNone));
  std::size_t unassigned = std::size_t{ell} * n;

  const std::uint32_t part_bits = BitsFor(ell);
  const std::uint32_t id_bits = BitsFor(n);
  const std::uint32_t start_bits = BitsFor(cap_fixed + 1);
  const std::uint32_t depth_bits = BitsFor(n);

  engine.BeginPhase("decomposition");
  std::vector<Offer> best(ell);
  std::vector<std::uint8_t> has_best(ell);
  std::vector<std::vector<std::uint32_t>> fresh(n);
  for (std::uint64_t round = 0;; ++round) {
    const std::uint64_t now = round * kScale;
    for (Vertex v = 0; v < n; ++v) {
      std::fill(has_best.begin(), has_best.end(), 0);
      for (std::uint32_t i = 0; i < ell; ++i) {
        if (center[i][v] == kNone && start[i][v] <= now) {
          best[i] = {start[i][v], v, v, 0};
          has_best[i] = 1;
        }
      }
      for (const Envelope& env : engine.inbox(v)) {
        const auto& r = env.msg.records;
        for (std::size_t j = 0; j + 3 < r.size(); j += 4) {
          const auto i = static_cast<std::uint32_t>(r[j]);
          if (center[i][v] != kNone) continue;
          const auto hops = static_cast<std::uint32_t>(r[j + 3]) + 1;
          Offer offer{r[j + 2] + hops * kScale, static_cast<Vertex>(r[j + 1]),
                      env.from, hops};
          if (!has_best[i] || offer < best[i]) {
            best[i] = offer;
            has_best[i] = 1;
          }
        }
      }
      fresh[v].clear();
      for (std::uint32_t i = 0; i < ell; ++i) {
        if (!has_best[i]) continue;
        center[i][v] = best[i].center;
        depth[i][v] = best[i].depth;
        d.tree_parent[i][v] = best[i].via;
        fresh[v].push_back(i);
        --unassigned;
      }
    }
    if (unassigned == 0) break;
    for (Vertex v = 0; v < n; ++v) {
      if (fresh[v].empty()) continue;
      MessageBuilder b;
      for (std::uint32_t i : fresh[v]) {
        b.Record(i, part_bits)
            .Record(center[i][v], id_bits)
            .Record(start[i][center[i][v]], start_bits)
            .Record(depth[i][v], depth_bits);
      }
      const Message msg = b.Build();
      for (const Incidence& inc : g.neighbors(v)) engine.Send(v, inc.edge, msg);
    }
    engine.Deliver();
  }
  engine.EndPhase();

  // Materialize clusters, numbered by (partition, center).
  d.partitions.assign(ell, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t i = 0; i < ell; ++i) {
    std::map<Vertex, std::uint32_t> index;
    for (Vertex v = 0; v < n; ++v) {
      if (center[i][v] == v) {
        index[v] = static_cast<std::uint32_t>(d.clusters.size());
        d.clusters.push_back({i, v, {}, 0});
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t c = index.at(center[i][v]);
      d.partitions[i][v] = c;
      d.clusters[c].members.push_back(v);
      d.clusters[c].hop_radius = std::max(d.clusters[c].hop_radius, depth[i][v]);
    }
  }
  result.trace = engine.trace();
  return result;
}

std::vector<EdgeId> UncoveredEdges(const Graph& g,
                                   const ClusterDecomposition& d) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (const auto& part : d.partitions) {
      if (part[e.u] == part[e.v]) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(e.id);
  }
  return out;
}

namespace {

SimTrace MergeTraces(const SimTrace& a, const SimTrace& b) {
  SimTrace t;
  t.rounds_used = a.rounds_used + b.rounds_used;
  t.max_bits_on_edge_per_round =
      std::max(a.max_bits_on_edge_per_round, b.max_bits_on_edge_per_round);
  t.messages_total = a.messages_total + b.messages_total;
  t.per_phase_rounds = a.per_phase_rounds;
  for (const auto& [name, rounds] : b.per_phase_rounds) {
    t.per_phase_rounds[name] += rounds;
  }
  t.attempts = a.attempts + b.attempts;
  return t;
}

// Runs the configured centralized construction on G[members]; returns
// global edge ids.
std::vector<EdgeId> ClusterSpanner(const Graph& g,
                                   const std::vector<Vertex>& members,
                                   const std::vector<EdgeId>& induced,
                                   const SpannerParams& p,
                                   ClusterAlgorithm algo, SpannerStats& stats) {
  std::map<Vertex, Vertex> local;
  for (Vertex v : members) local.emplace(v, static_cast<Vertex>(local.size()));
  std::vector<Graph::EdgeSpec> specs;
  specs.reserve(induced.size());
  for (EdgeId e : induced) {
    const Edge& edge = g.edge(e);
    specs.push_back({local.at(edge.u), local.at(edge.v), edge.w});
  }
  const Graph sub(members.size(), specs);
  const SpannerResult r = algo == ClusterAlgorithm::kExactGreedy
                              ? ExactGreedy(sub, p)
                              : ModifiedGreedyWeighted(sub, p);
  stats.lbc_calls += r.stats.lbc_calls;
  stats.bfs_runs += r.stats.bfs_runs;
  std::vector<EdgeId> out;
  out.reserve(r.spanner_edge_ids.size());
  for (EdgeId id : r.spanner_edge_ids) out.push_back(induced[id]);
  return out;
}

// One decomposition plus, when it covers every edge, the gather / compute
// / scatter pass. Returns false on a coverage failure.
bool LocalAttempt(const Graph& g, const SpannerParams& p, const SimConfig& cfg,
                  SimSpannerResult& out) {
  DecompositionResult dr = PaddedDecomposition(g, cfg);
  const ClusterDecomposition& d = dr.decomposition;
  const std::size_t n = g.num_vertices();
  const auto ell = static_cast<std::uint32_t>(d.partitions.size());

  RoundEngine engine(g, Model::kLocal, kLocalMessageBitCap, cfg.max_rounds);
  const std::uint32_t part_bits = BitsFor(std::max<std::uint32_t>(ell, 1));
  const std::uint32_t cluster_bits = BitsFor(std::max<std::size_t>(d.clusters.size(), 1));
  const std::uint32_t id_bits = BitsFor(n);
  Weight max_w = 0;
  for (const Edge& e : g.edges()) max_w = std::max(max_w, e.w);
  const std::uint32_t weight_bits = BitsFor(max_w + 1);
  const std::uint32_t edge_bits = 2 * id_bits + weight_bits;

  // Round 1: tell every neighbor the cluster of each partition. Afterwards
  // each node knows which incident edges are internal to which clusters and
  // whether every incident edge is covered.
  engine.BeginPhase("gather");
  for (Vertex v = 0; v < n; ++v) {
    for (const Incidence& inc : g.neighbors(v)) {
      MessageBuilder b;
      for (std::uint32_t i = 0; i < ell; ++i) {
        b.Record(d.partitions[i][v], cluster_bits);
      }
      engine.Send(v, inc.edge, b.Build());
    }
  }
  engine.Deliver();
  // internal[i][v]: edges {v,x} inside v's cluster of partition i with v < x.
  std::vector<std::vector<std::vector<EdgeId>>> internal(
      ell, std::vector<std::vector<EdgeId>>(n));
  bool covered = true;
  for (Vertex v = 0; v < n; ++v) {
    for (const Envelope& env : engine.inbox(v)) {
      bool shared = false;
      for (std::uint32_t i = 0; i < ell; ++i) {
        if (env.msg.records[i] == d.partitions[i][v]) {
          shared = true;
          if (v < env.from) internal[i][v].push_back(env.edge);
        }
      }
      covered = covered && shared;
    }
  }
  if (!covered) {
    engine.EndPhase();
    out.trace = MergeTraces(dr.trace, engine.trace());
    out.trace.attempts = 1;
    return false;
  }

  // Convergecast. Records are (partition, kind, value): kind 0 announces a
  // vertex, kind 1 an internal edge. subtree[i][v] collects, per child
  // edge, the vertices announced through it.
  struct Rec {
    std::uint32_t part;
    std::uint8_t kind;
    std::uint64_t value;
  };
  std::vector<std::vector<Rec>> outgoing(n);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < ell; ++i) {
      if (d.tree_parent[i][v] == v) continue;
      outgoing[v].push_back({i, 0, v});
      for (EdgeId e : internal[i][v]) outgoing[v].push_back({i, 1, e});
    }
  }
  // At the center: members and internal edges of its cluster.
  std::vector<std::vector<Vertex>> gathered_members(d.clusters.size());
  std::vector<std::vector<EdgeId>> gathered_edges(d.clusters.size());
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < ell; ++i) {
      if (d.tree_parent[i][v] != v) continue;
      const std::uint32_t c = d.partitions[i][v];
      gathered_members[c].push_back(v);
      for (EdgeId e : internal[i][v]) gathered_edges[c].push_back(e);
    }
  }
  // child_subtree[i][v]: (child, vertex) pairs seen in the convergecast.
  std::vector<std::vector<std::vector<std::pair<Vertex, Vertex>>>> child_subtree(
      ell, std::vector<std::vector<std::pair<Vertex, Vertex>>>(n));

  while (true) {
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      if (outgoing[v].empty()) continue;
      // One bundle per parent neighbor.
      std::map<Vertex, MessageBuilder> bundles;
      for (const Rec& r : outgoing[v]) {
        MessageBuilder& b = bundles[d.tree_parent[r.part][v]];
        b.Record(r.part, part_bits)
            .Record(r.kind, 1)
            .Record(r.value, r.kind == 0 ? id_bits : edge_bits);
      }
      for (auto& [parent, b] : bundles) {
        engine.Send(v, *g.find_edge(v, parent), b.Build());
      }
      outgoing[v].clear();
      any = true;
    }
    if (!any) break;
    engine.Deliver();
    for (Vertex v = 0; v < n; ++v) {
      for (const Envelope& env : engine.inbox(v)) {
        const auto& rec = env.msg.records;
        for (std::size_t j = 0; j + 2 < rec.size(); j += 3) {
          const auto i = static_cast<std::uint32_t>(rec[j]);
          const auto kind = static_cast<std::uint8_t>(rec[j + 1]);
          const std::uint64_t value = rec[j + 2];
          if (kind == 0) {
            child_subtree[i][v].push_back({env.from, static_cast<Vertex>(value)});
          }
          if (d.tree_parent[i][v] == v) {
            const std::uint32_t c = d.partitions[i][v];
            if (kind == 0) {
              gathered_members[c].push_back(static_cast<Vertex>(value));
            } else {
              gathered_edges[c].push_back(static_cast<EdgeId>(value));
            }
          } else {
            outgoing[v].push_back({i, kind, value});
          }
        }
      }
    }
  }
  engine.EndPhase();

  // Centers compute. Identical clusters in different partitions give
  // identical answers, so they are computed once.
  SpannerStats stats;
  std::map<std::vector<Vertex>, std::vector<EdgeId>> memo;
  std::vector<std::vector<EdgeId>> selected(d.clusters.size());
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    auto& members = gathered_members[c];
    std::sort(members.begin(), members.end());
    auto& edges = gathered_edges[c];
    std::sort(edges.begin(), edges.end());
    auto it = memo.find(members);
    if (it == memo.end()) {
      it = memo.emplace(members, ClusterSpanner(g, members, edges, p,
                                                cfg.cluster_algorithm, stats))
               .first;
    }
    selected[c] = it->second;
  }

  // Scatter: each node passes to a child only the selected edges touching
  // that child's subtree, and keeps the ones incident to itself.
  engine.BeginPhase("scatter");
  std::vector<std::vector<EdgeId>> learned(n);
  // inbound[i][v]: selected edges v has to process in partition i.
  std::vector<std::vector<std::vector<EdgeId>>> inbound(
      ell, std::vector<std::vector<EdgeId>>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < ell; ++i) {
      if (d.tree_parent[i][v] == v) inbound[i][v] = selected[d.partitions[i][v]];
    }
  }
  while (true) {
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      std::map<Vertex, MessageBuilder> bundles;
      for (std::uint32_t i = 0; i < ell; ++i) {
        if (inbound[i][v].empty()) continue;
        std::map<Vertex, std::vector<Vertex>> below;
        for (auto [child, x] : child_subtree[i][v]) below[child].push_back(x);
        for (auto& [child, xs] : below) std::sort(xs.begin(), xs.end());
        for (EdgeId e : inbound[i][v]) {
          const Edge& edge = g.edge(e);
          if (edge.u == v || edge.v == v) learned[v].push_back(e);
          for (const auto& [child, xs] : below) {
            if (std::binary_search(xs.begin(), xs.end(), edge.u) ||
                std::binary_search(xs.begin(), xs.end(), edge.v)) {
              bundles[child].Record(i, part_bits).Record(e, edge_bits);
            }
          }
        }
        inbound[i][v].clear();
      }
      for (auto& [child, b] : bundles) {
        engine.Send(v, *g.find_edge(v, child), b.Build());
        any = true;
      }
    }
    if (!any) break;
    engine.Deliver();
    for (Vertex v = 0; v < n; ++v) {
      for (const Envelope& env : engine.inbox(v)) {
        const auto& rec = env.msg.records;
        for (std::size_t j = 0; j + 1 < rec.size(); j += 2) {
          inbound[rec[j]][v].push_back(static_cast<EdgeId>(rec[j + 1]));
        }
      }
    }
  }
  engine.EndPhase();

  std::vector<EdgeId> spanner;
  for (const auto& list : learned) spanner.insert(spanner.end(), list.begin(), list.end());
  std::sort(spanner.begin(), spanner.end());
  spanner.erase(std::unique(spanner.begin(), spanner.end()), spanner.end());
  out.spanner.spanner_edge_ids = std::move(spanner);
  out.spanner.stats = std::move(stats);
  out.spanner.stats.edges_kept = out.spanner.spanner_edge_ids.size();
  out.trace = MergeTraces(dr.trace, engine.trace());
  out.trace.attempts = 1;
  return true;
}

}  // namespace

SimSpannerResult LocalFtSpanner(const Graph& g, const SpannerParams& p,
                                const SimConfig& cfg) {
  if (cfg.model != Model::kLocal) {
    throw InvalidArgument("LOCAL construction needs model=local");
  }
  ValidateParams(p);
  SimTrace total;
  total.attempts = 0;
  for (std::uint32_t attempt = 0; attempt <= cfg.retries; ++attempt) {
    SimConfig run = cfg;
    if (attempt > 0) run.seed = DeriveSeed(cfg.seed, {0xA77E, attempt});
    SimSpannerResult result;
    const bool ok = LocalAttempt(g, p, run, result);
    total = MergeTraces(total, result.trace);
    if (ok) {
      result.trace = total;
      return result;
    }
  }
  throw SimulationError("padded decomposition left an edge uncovered after " +
                        std::to_string(cfg.retries + 1) + " attempts");
}

}  // namespace ftspanner
