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

#ifndef FTSPANNER_SRC_BASWANA_SEN_PROTOCOL_H_
#define FTSPANNER_SRC_BASWANA_SEN_PROTOCOL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ftspanner/engine.h"
#include "ftspanner/graph.h"

namespace ftspanner::internal {

struct Outgoing {
  Vertex from;
  EdgeId edge;
  Message msg;
};

struct Incoming {
  Vertex to;
  Vertex from;
  EdgeId edge;
  const Message* msg;
};

// One run of the Baswana-Sen (2k-1)-spanner protocol on `g`, driven one
// logical round at a time so that several runs can share the links.
//
// Phase i = 1..k-1:
//   i-1 rounds   each cluster center flips a coin (probability
//                `sample_prob`) and the bit travels down the cluster tree;
//   1 round      every node tells each live neighbor (cluster, sampled);
//   (local)      a node of an unsampled cluster joins the nearest sampled
//                neighbor cluster via its lightest edge, keeping the
//                lightest edge to every cluster that is strictly closer
//                and dropping all edges to those clusters; with no sampled
//                neighbor it keeps the lightest edge to every neighbor
//                cluster and leaves. Intra-cluster edges are dropped.
//   1 round      dropped edges and joins are announced to the neighbor.
// Final phase, 1 round: exchange clusters; every node keeps the lightest
// edge to each adjacent cluster.
//
// "Lightest" is by (weight, edge id). Node handlers read only their own
// state and the messages addressed to them.
class BaswanaSenProtocol {
 public:
  // tag_bits == 0 sends untagged messages.
  BaswanaSenProtocol(const Graph& g, std::uint32_t k, double sample_prob,
                     std::uint64_t seed, std::uint32_t tag,
                     std::uint32_t tag_bits);

  bool done() const { return step_ >= steps_.size(); }
  std::size_t num_rounds() const { return steps_.size(); }

  // Messages of the current logical round.
  void Emit(std::vector<Outgoing>& out);
  // Everything delivered to this run in the current logical round; then
  // advances to the next one.
  void Absorb(std::span<const Incoming> in);

  // Ascending, without duplicates.
  std::vector<EdgeId> spanner_edges() const;

 private:
  enum class StepKind { kBroadcast, kExchange, kNotify, kFinal };
  enum MessageKind : std::uint64_t {
    kSampledBit = 0,
    kCluster = 1,
    kDiscard = 2,
    kJoin = 3,
  };
  struct Step {
    StepKind kind;
    std::uint32_t phase;
    bool first_in_phase;
  };
  struct NeighborInfo {
    EdgeId edge;
    Vertex neighbor;
    Vertex cluster;
    bool sampled;
  };

  static constexpr Vertex kNoCluster = ~Vertex{0};

  MessageBuilder Header(MessageKind kind) const;
  bool Alive(Vertex v, EdgeId e) const;
  void Kill(Vertex v, EdgeId e);
  // (weight, id) order.
  bool Lighter(EdgeId a, EdgeId b) const;
  void FlipCoins();
  void Decide(Vertex v);
  void ConnectToAdjacentClusters(Vertex v);

  const Graph* g_;
  std::uint32_t k_;
  double sample_prob_;
  std::uint64_t seed_;
  std::uint32_t tag_;
  std::uint32_t tag_bits_;
  std::uint32_t id_bits_;

  std::vector<Step> steps_;
  std::size_t step_ = 0;

  std::vector<std::uint8_t> active_;
  std::vector<Vertex> cluster_;
  std::vector<std::uint8_t> sampled_;
  std::vector<std::uint8_t> knows_sampled_;
  std::vector<std::uint8_t> forwarded_;
  std::vector<std::vector<EdgeId>> child_edges_;
  // alive_[2e] is u's view of edge e, alive_[2e+1] is v's.
  std::vector<std::uint8_t> alive_;
  std::vector<std::vector<NeighborInfo>> neighbors_;
  std::vector<std::vector<std::pair<EdgeId, MessageKind>>> notices_;
  std::vector<EdgeId> added_;
};

}  // namespace ftspanner::internal

#endif  // FTSPANNER_SRC_BASWANA_SEN_PROTOCOL_H_
