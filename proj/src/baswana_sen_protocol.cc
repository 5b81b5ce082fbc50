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

#include "baswana_sen_protocol.h"

#include <algorithm>
#include <tuple>

#include "ftspanner/random.h"

namespace ftspanner::internal {

BaswanaSenProtocol::BaswanaSenProtocol(const Graph& g, std::uint32_t k,
                                       double sample_prob, std::uint64_t seed,
                                       std::uint32_t tag,
                                       std::uint32_t tag_bits)
    : g_(&g),
      k_(k),
      sample_prob_(sample_prob),
      seed_(seed),
      tag_(tag),
      tag_bits_(tag_bits),
      id_bits_(BitsFor(g.num_vertices())) {
  for (std::uint32_t phase = 1; phase < k; ++phase) {
    for (std::uint32_t j = 0; j + 1 < phase; ++j) {
      steps_.push_back({StepKind::kBroadcast, phase, j == 0});
    }
    steps_.push_back({StepKind::kExchange, phase, phase == 1});
    steps_.push_back({StepKind::kNotify, phase, false});
  }
  steps_.push_back({StepKind::kFinal, k, false});

  const std::size_t n = g.num_vertices();
  active_.assign(n, 1);
  cluster_.resize(n);
  for (Vertex v = 0; v < n; ++v) cluster_[v] = v;
  sampled_.assign(n, 0);
  knows_sampled_.assign(n, 0);
  forwarded_.assign(n, 0);
  child_edges_.resize(n);
  alive_.assign(2 * g.num_edges(), 1);
  neighbors_.resize(n);
  notices_.resize(n);
}

MessageBuilder BaswanaSenProtocol::Header(MessageKind kind) const {
  MessageBuilder b;
  if (tag_bits_ > 0) b.Tag(tag_, tag_bits_);
  b.Field(kind, 2);
  return b;
}

bool BaswanaSenProtocol::Alive(Vertex v, EdgeId e) const {
  return alive_[2 * std::size_t{e} + (g_->edge(e).u == v ? 0 : 1)] != 0;
}

void BaswanaSenProtocol::Kill(Vertex v, EdgeId e) {
  alive_[2 * std::size_t{e} + (g_->edge(e).u == v ? 0 : 1)] = 0;
}

bool BaswanaSenProtocol::Lighter(EdgeId a, EdgeId b) const {
  return std::make_pair(g_->edge(a).w, a) < std::make_pair(g_->edge(b).w, b);
}

void BaswanaSenProtocol::FlipCoins() {
  const Step& step = steps_[step_];
  for (Vertex v = 0; v < g_->num_vertices(); ++v) {
    knows_sampled_[v] = 0;
    forwarded_[v] = 0;
    if (!active_[v] || cluster_[v] != v) continue;
    Rng rng(DeriveSeed(seed_, {v, step.phase, 0xC0C0}));
    sampled_[v] = rng.Bernoulli(sample_prob_) ? 1 : 0;
    knows_sampled_[v] = 1;
  }
}

void BaswanaSenProtocol::Emit(std::vector<Outgoing>& out) {
  const Step& step = steps_[step_];
  if (step.first_in_phase) FlipCoins();
  const std::size_t n = g_->num_vertices();
  switch (step.kind) {
    case StepKind::kBroadcast:
      for (Vertex v = 0; v < n; ++v) {
        if (!active_[v] || !knows_sampled_[v] || forwarded_[v]) continue;
        forwarded_[v] = 1;
        for (EdgeId e : child_edges_[v]) {
          out.push_back({v, e, Header(kSampledBit).Field(sampled_[v], 1).Build()});
        }
      }
      break;
    case StepKind::kExchange:
    case StepKind::kFinal:
      for (Vertex v = 0; v < n; ++v) {
        if (!active_[v]) continue;
        for (const Incidence& inc : g_->neighbors(v)) {
          if (!Alive(v, inc.edge)) continue;
          out.push_back({v, inc.edge,
                         Header(kCluster)
                             .Field(cluster_[v], id_bits_)
                             .Field(sampled_[v], 1)
                             .Build()});
        }
      }
      break;
    case StepKind::kNotify:
      for (Vertex v = 0; v < n; ++v) {
        for (auto [e, kind] : notices_[v]) {
          out.push_back({v, e, Header(kind).Build()});
        }
        notices_[v].clear();
      }
      break;
  }
}

void BaswanaSenProtocol::Absorb(std::span<const Incoming> in) {
  const Step& step = steps_[step_];
  const std::size_t n = g_->num_vertices();
  switch (step.kind) {
    case StepKind::kBroadcast:
      for (const Incoming& m : in) {
        sampled_[m.to] = static_cast<std::uint8_t>(m.msg->fields[1]);
        knows_sampled_[m.to] = 1;
      }
      break;
    case StepKind::kExchange:
    case StepKind::kFinal:
      for (auto& list : neighbors_) list.clear();
      for (const Incoming& m : in) {
        neighbors_[m.to].push_back({m.edge, m.from,
                                    static_cast<Vertex>(m.msg->fields[1]),
                                    m.msg->fields[2] != 0});
      }
      for (Vertex v = 0; v < n; ++v) {
        if (!active_[v]) continue;
        if (step.kind == StepKind::kExchange) {
          Decide(v);
        } else {
          ConnectToAdjacentClusters(v);
        }
      }
      break;
    case StepKind::kNotify:
      for (const Incoming& m : in) {
        Kill(m.to, m.edge);
        if (m.msg->fields[0] == kJoin) child_edges_[m.to].push_back(m.edge);
      }
      break;
  }
  ++step_;
}

void BaswanaSenProtocol::Decide(Vertex v) {
  auto& info = neighbors_[v];
  const Vertex own = cluster_[v];
  for (const NeighborInfo& x : info) {
    if (x.cluster == own) Kill(v, x.edge);
  }
  if (sampled_[v]) return;

  // Lightest edge into each other cluster.
  std::sort(info.begin(), info.end(),
            [&](const NeighborInfo& a, const NeighborInfo& b) {
              if (a.cluster != b.cluster) return a.cluster < b.cluster;
              return Lighter(a.edge, b.edge);
            });
  const NeighborInfo* join = nullptr;
  for (std::size_t i = 0; i < info.size(); ++i) {
    if (info[i].cluster == own) continue;
    const bool first_of_cluster = i == 0 || info[i - 1].cluster != info[i].cluster;
    if (first_of_cluster && info[i].sampled &&
        (join == nullptr || Lighter(info[i].edge, join->edge))) {
      join = &info[i];
    }
  }

  child_edges_[v].clear();
  auto drop_cluster = [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      Kill(v, info[j].edge);
      notices_[v].push_back({info[j].edge, kDiscard});
    }
  };
  for (std::size_t i = 0; i < info.size();) {
    std::size_t end = i;
    while (end < info.size() && info[end].cluster == info[i].cluster) ++end;
    const NeighborInfo& lightest = info[i];
    if (lightest.cluster == own) {
      // Already dropped above.
    } else if (join != nullptr && lightest.cluster == join->cluster) {
      added_.push_back(join->edge);
      for (std::size_t j = i; j < end; ++j) {
        Kill(v, info[j].edge);
        notices_[v].push_back(
            {info[j].edge, info[j].edge == join->edge ? kJoin : kDiscard});
      }
    } else if (join == nullptr || Lighter(lightest.edge, join->edge)) {
      added_.push_back(lightest.edge);
      drop_cluster(i, end);
    }
    i = end;
  }
  if (join != nullptr) {
    cluster_[v] = join->cluster;
  } else {
    active_[v] = 0;
    cluster_[v] = kNoCluster;
  }
}

void BaswanaSenProtocol::ConnectToAdjacentClusters(Vertex v) {
  auto& info = neighbors_[v];
  std::sort(info.begin(), info.end(),
            [&](const NeighborInfo& a, const NeighborInfo& b) {
              if (a.cluster != b.cluster) return a.cluster < b.cluster;
              return Lighter(a.edge, b.edge);
            });
  for (std::size_t i = 0; i < info.size(); ++i) {
    if (info[i].cluster == cluster_[v]) continue;
    if (i == 0 || info[i - 1].cluster != info[i].cluster) {
      added_.push_back(info[i].edge);
    }
  }
}

std::vector<EdgeId> BaswanaSenProtocol::spanner_edges() const {
  std::vector<EdgeId> edges = added_;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace ftspanner::internal
