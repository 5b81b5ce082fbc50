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
#include <memory>
#include <string>

#include "baswana_sen_protocol.h"
#include "ftspanner/distsim.h"
#include "ftspanner/errors.h"
#include "ftspanner/random.h"

namespace ftspanner {

using internal::BaswanaSenProtocol;
using internal::Incoming;
using internal::Outgoing;

namespace {

double SampleProbability(double n, std::uint32_t k) {
  if (n <= 1.0) return 1.0;
  return std::min(1.0, std::pow(n, -1.0 / static_cast<double>(k)));
}

SimTrace Sum(const SimTrace& a, const SimTrace& b) {
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

// One iteration's participants and their induced subgraph, relabeled to
// 0..|participants|-1 in ascending global order.
struct Instance {
  std::vector<Vertex> participants;
  std::vector<EdgeId> edge_to_global;  // ascending
  Graph graph;
  std::unique_ptr<BaswanaSenProtocol> protocol;

  Vertex Local(Vertex v) const {
    return static_cast<Vertex>(
        std::lower_bound(participants.begin(), participants.end(), v) -
        participants.begin());
  }
  EdgeId LocalEdge(EdgeId e) const {
    return static_cast<EdgeId>(
        std::lower_bound(edge_to_global.begin(), edge_to_global.end(), e) -
        edge_to_global.begin());
  }
};

struct Received {
  Vertex to;
  Vertex from;
  EdgeId edge;
  Message msg;
};

// Returns false when some directed edge needed more slots than a logical
// round provides.
bool MultiplexedAttempt(const Graph& g, const SpannerParams& p, const SimConfig& cfg,
               std::uint64_t word_bits, SimSpannerResult& out) {
  const std::size_t n = g.num_vertices();
  const double log_n = Log2N(n);
  const auto iterations = static_cast<std::uint32_t>(
      std::ceil(cfg.iteration_factor * std::pow(static_cast<double>(p.f), 3) * log_n));
  const std::uint32_t tag_bits = BitsFor(iterations);
  const std::uint64_t slots =
      std::uint64_t{cfg.slot_factor} * p.f *
      static_cast<std::uint64_t>(std::ceil(log_n));
  const double participation = 1.0 / p.f;

  // Selection: which iterations each vertex takes part in, ascending.
  std::vector<std::vector<std::uint32_t>> selected(n);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng(DeriveSeed(cfg.seed, {0x5E1E, v}));
    for (std::uint32_t j = 0; j < iterations; ++j) {
      if (rng.Bernoulli(participation)) selected[v].push_back(j);
    }
  }

  RoundEngine engine(g, Model::kCongest, word_bits, cfg.max_rounds);

  // Phase 1: every vertex streams its selection list to every neighbor,
  // as many tags per message as fit next to a one-bit "last" flag.
  if (word_bits < tag_bits + 1) {
    throw InvalidArgument("word_bits " + std::to_string(word_bits) +
                          " cannot carry a " + std::to_string(tag_bits) +
                          "-bit iteration tag");
  }
  const std::size_t per_message = (word_bits - 1) / tag_bits;
  // heard[v][x]: x's selection list as reconstructed by v, by incidence.
  std::vector<std::vector<std::vector<std::uint32_t>>> heard(n);
  for (Vertex v = 0; v < n; ++v) heard[v].resize(g.neighbors(v).size());
  engine.BeginPhase("selection");
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::uint8_t> finished(n, 0);
  std::size_t unfinished = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbors(v).empty()) {
      finished[v] = 1;
    } else {
      ++unfinished;
    }
  }
  while (unfinished > 0) {
    for (Vertex v = 0; v < n; ++v) {
      if (finished[v]) continue;
      const auto& list = selected[v];
      const std::size_t end = std::min(list.size(), cursor[v] + per_message);
      const bool last = end == list.size();
      MessageBuilder b;
      b.Field(last ? 1 : 0, 1);
      for (std::size_t i = cursor[v]; i < end; ++i) b.Record(list[i], tag_bits);
      const Message msg = b.Build();
      for (const Incidence& inc : g.neighbors(v)) engine.Send(v, inc.edge, msg);
      cursor[v] = end;
      if (last) {
        finished[v] = 1;
        --unfinished;
      }
    }
    engine.Deliver();
    for (Vertex v = 0; v < n; ++v) {
      const auto nbrs = g.neighbors(v);
      for (const Envelope& env : engine.inbox(v)) {
        const auto it = std::lower_bound(
            nbrs.begin(), nbrs.end(), env.from,
            [](const Incidence& inc, Vertex x) { return inc.to < x; });
        auto& list = heard[v][static_cast<std::size_t>(it - nbrs.begin())];
        for (std::uint64_t tag : env.msg.records) {
          list.push_back(static_cast<std::uint32_t>(tag));
        }
      }
    }
  }
  engine.EndPhase();

  // Each instance's induced subgraph, as the endpoints now know it: an
  // edge belongs to iteration j iff both endpoints selected j. Checked
  // from the lower endpoint's reconstructed view of the other.
  std::vector<Instance> instances(iterations);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t j : selected[v]) instances[j].participants.push_back(v);
  }
  std::vector<std::vector<EdgeId>> instance_edges(iterations);
  for (const Edge& e : g.edges()) {
    const Vertex lo = std::min(e.u, e.v);
    const Vertex hi = e.other(lo);
    const auto nbrs = g.neighbors(lo);
    const auto it = std::lower_bound(
        nbrs.begin(), nbrs.end(), hi,
        [](const Incidence& inc, Vertex x) { return inc.to < x; });
    const auto& theirs = heard[lo][static_cast<std::size_t>(it - nbrs.begin())];
    const auto& mine = selected[lo];
    std::vector<std::uint32_t> both;
    std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                          std::back_inserter(both));
    for (std::uint32_t j : both) instance_edges[j].push_back(e.id);
  }
  const double sample_prob =
      SampleProbability(static_cast<double>(n) / p.f, p.k);
  for (std::uint32_t j = 0; j < iterations; ++j) {
    Instance& inst = instances[j];
    inst.edge_to_global = std::move(instance_edges[j]);
    std::vector<Graph::EdgeSpec> specs;
    specs.reserve(inst.edge_to_global.size());
    for (EdgeId e : inst.edge_to_global) {
      const Edge& edge = g.edge(e);
      specs.push_back({inst.Local(edge.u), inst.Local(edge.v), edge.w});
    }
    inst.graph = Graph(inst.participants.size(), specs);
    inst.protocol = std::make_unique<BaswanaSenProtocol>(
        inst.graph, p.k, sample_prob, DeriveSeed(cfg.seed, {0xD15C, j}), j,
        tag_bits);
  }

  // Phase 2: every logical Baswana-Sen round takes `slots` engine rounds.
  // On each directed edge the messages of the round are ranked by tag and
  // the message of rank q goes out in slot q.
  engine.BeginPhase("multiplexed");
  const std::size_t logical_rounds =
      iterations == 0 ? 0 : instances.front().protocol->num_rounds();
  std::vector<Outgoing> outgoing;
  // by_slot[q]: (global sender, global edge, message).
  std::vector<std::vector<Outgoing>> by_slot;
  std::vector<std::vector<Received>> received(iterations);
  std::vector<std::uint32_t> rank(2 * g.num_edges(), 0);
  std::vector<std::size_t> touched;
  bool overflow = false;
  for (std::size_t round = 0; round < logical_rounds && !overflow; ++round) {
    by_slot.clear();
    for (std::uint32_t j = 0; j < iterations; ++j) {
      Instance& inst = instances[j];
      outgoing.clear();
      inst.protocol->Emit(outgoing);
      for (Outgoing& o : outgoing) {
        const Vertex from = inst.participants[o.from];
        const EdgeId edge = inst.edge_to_global[o.edge];
        const std::size_t dir =
            2 * std::size_t{edge} + (g.edge(edge).u == from ? 0 : 1);
        if (rank[dir] == 0) touched.push_back(dir);
        const std::uint32_t q = rank[dir]++;
        if (q >= slots) {
          overflow = true;
          continue;
        }
        if (by_slot.size() <= q) by_slot.resize(q + 1);
        by_slot[q].push_back({from, edge, std::move(o.msg)});
      }
    }
    for (std::size_t dir : touched) rank[dir] = 0;
    touched.clear();
    if (overflow) break;

    for (auto& list : received) list.clear();
    for (auto& slot : by_slot) {
      for (Outgoing& o : slot) engine.Send(o.from, o.edge, std::move(o.msg));
      engine.Deliver();
      for (Vertex v = 0; v < n; ++v) {
        for (Envelope& env : engine.TakeInbox(v)) {
          received[env.msg.tag].push_back(
              {v, env.from, env.edge, std::move(env.msg)});
        }
      }
    }
    if (by_slot.size() < slots && round + 1 < logical_rounds) {
      engine.Idle(slots - by_slot.size());
    }
    std::vector<Incoming> in;
    for (std::uint32_t j = 0; j < iterations; ++j) {
      Instance& inst = instances[j];
      in.clear();
      for (const Received& r : received[j]) {
        in.push_back({inst.Local(r.to), inst.Local(r.from),
                      inst.LocalEdge(r.edge), &r.msg});
      }
      inst.protocol->Absorb(in);
    }
  }
  engine.EndPhase();
  out.trace = engine.trace();
  out.trace.attempts = 1;
  if (overflow) return false;

  std::vector<EdgeId> spanner;
  for (const Instance& inst : instances) {
    for (EdgeId e : inst.protocol->spanner_edges()) {
      spanner.push_back(inst.edge_to_global[e]);
    }
  }
  std::sort(spanner.begin(), spanner.end());
  spanner.erase(std::unique(spanner.begin(), spanner.end()), spanner.end());
  out.spanner.spanner_edge_ids = std::move(spanner);
  out.spanner.stats.edges_kept = out.spanner.spanner_edge_ids.size();
  return true;
}

}  // namespace

SimSpannerResult BaswanaSen(const Graph& g, std::uint32_t k,
                            const SimConfig& cfg) {
  if (cfg.model != Model::kCongest) {
    throw InvalidArgument("Baswana-Sen needs model=congest");
  }
  ValidateParams({k, 0, FaultMode::kVertex});
  const std::size_t n = g.num_vertices();
  const std::uint64_t word_bits = EffectiveWordBits(cfg, n);
  RoundEngine engine(g, Model::kCongest, word_bits, cfg.max_rounds);
  BaswanaSenProtocol protocol(g, k, SampleProbability(static_cast<double>(n), k),
                              cfg.seed, 0, 0);
  engine.BeginPhase("baswana-sen");
  std::vector<Outgoing> outgoing;
  std::vector<Incoming> in;
  while (!protocol.done()) {
    outgoing.clear();
    protocol.Emit(outgoing);
    for (Outgoing& o : outgoing) engine.Send(o.from, o.edge, std::move(o.msg));
    engine.Deliver();
    in.clear();
    for (Vertex v = 0; v < n; ++v) {
      for (const Envelope& env : engine.inbox(v)) {
        in.push_back({v, env.from, env.edge, &env.msg});
      }
    }
    protocol.Absorb(in);
  }
  engine.EndPhase();
  SimSpannerResult result;
  result.spanner.spanner_edge_ids = protocol.spanner_edges();
  result.spanner.stats.edges_kept = result.spanner.spanner_edge_ids.size();
  result.trace = engine.trace();
  return result;
}

SimSpannerResult CongestFtSpanner(const Graph& g, const SpannerParams& p,
                                    const SimConfig& cfg) {
  if (cfg.model != Model::kCongest) {
    throw InvalidArgument("multiplexed construction needs model=congest");
  }
  ValidateParams(p);
  if (p.f == 0) throw InvalidArgument("multiplexed construction needs f >= 1");
  const std::uint64_t word_bits = EffectiveWordBits(cfg, g.num_vertices());
  SimTrace total;
  total.attempts = 0;
  for (std::uint32_t attempt = 0; attempt <= cfg.retries; ++attempt) {
    SimConfig run = cfg;
    if (attempt > 0) run.seed = DeriveSeed(cfg.seed, {0xA77E, attempt});
    SimSpannerResult result;
    const bool ok = MultiplexedAttempt(g, p, run, word_bits, result);
    total = Sum(total, result.trace);
    if (ok) {
      result.trace = total;
      return result;
    }
  }
  throw SimulationError("slot overflow in every one of " +
                        std::to_string(cfg.retries + 1) + " attempts");
}

}  // namespace ftspanner
