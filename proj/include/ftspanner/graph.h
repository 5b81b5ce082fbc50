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

// Weighted undirected simple graphs with stable edge ids, edge subsets of
// such graphs, and fault-masked traversal (hop-bounded BFS and Dijkstra).

#ifndef FTSPANNER_GRAPH_H_
#define FTSPANNER_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ftspanner {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
// Weights are exact integers so that weight order has no ties hidden by
// rounding.
using Weight = std::uint64_t;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

// Both saturate at kInfinity.
Weight SaturatingAdd(Weight a, Weight b);
Weight SaturatingMul(Weight a, Weight b);

enum class FaultMode { kVertex, kEdge };

std::string_view ToString(FaultMode mode);
// Accepts "vertex" or "edge"; throws InvalidArgument otherwise.
FaultMode ParseFaultMode(std::string_view text);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
  EdgeId id = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

using AdjacencyList = std::vector<std::vector<Incidence>>;

// Non-owning view used by every traversal. `edges` is always the edge table
// of the full graph so that edge ids mean the same thing in a graph and in
// any of its subgraphs; `adjacency` lists only the edges present in the
// viewed graph, each list sorted by neighbor id.
struct GraphView {
  const AdjacencyList* adjacency = nullptr;
  const std::vector<Edge>* edges = nullptr;

  std::size_t num_vertices() const { return adjacency->size(); }
  std::span<const Incidence> neighbors(Vertex v) const {
    return (*adjacency)[v];
  }
  const Edge& edge(EdgeId id) const { return (*edges)[id]; }
};

// Immutable after construction.
class Graph {
 public:
  struct EdgeSpec {
    Vertex u;
    Vertex v;
    Weight w = 1;
  };

  Graph() = default;
  // Edge i of `edges` receives id i. Throws InvalidArgument on a self-loop,
  // a parallel edge, or an endpoint >= n.
  Graph(std::size_t n, std::span<const EdgeSpec> edges);
  Graph(std::size_t n, std::initializer_list<EdgeSpec> edges)
      : Graph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return adjacency_[v];
  }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool is_unit_weight() const;

  GraphView view() const { return {&adjacency_, &edges_}; }

  // The subgraph on the same vertex set keeping only `ids`, renumbered in
  // ascending id order.
  Graph EdgeSubgraph(std::span<const EdgeId> ids) const;

 private:
  AdjacencyList adjacency_;
  std::vector<Edge> edges_;
};

// A growing edge subset of a fixed parent graph, sharing its vertex set and
// edge ids. Insertion keeps each adjacency list sorted by neighbor id.
class Subgraph {
 public:
  explicit Subgraph(const Graph& parent);
  Subgraph(const Graph& parent, std::span<const EdgeId> ids);

  void add_edge(EdgeId id);
  bool contains(EdgeId id) const { return present_[id] != 0; }
  std::size_t num_edges() const { return count_; }
  // Ascending.
  std::vector<EdgeId> edge_ids() const;

  const Graph& parent() const { return *parent_; }
  GraphView view() const { return {&adjacency_, &parent_->edges()}; }

 private:
  const Graph* parent_;
  AdjacencyList adjacency_;
  std::vector<std::uint8_t> present_;
  std::size_t count_ = 0;
};

// A set of deleted vertices or deleted edges. Members are kept sorted and
// unique.
class FaultSet {
 public:
  explicit FaultSet(FaultMode mode = FaultMode::kVertex) : mode_(mode) {}
  FaultSet(FaultMode mode, std::vector<std::uint32_t> members);

  static FaultSet Vertices(std::vector<Vertex> members) {
    return FaultSet(FaultMode::kVertex, std::move(members));
  }
  static FaultSet Edges(std::vector<EdgeId> members) {
    return FaultSet(FaultMode::kEdge, std::move(members));
  }

  FaultMode mode() const { return mode_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint32_t x) const;
  void insert(std::uint32_t x);

  friend bool operator==(const FaultSet&, const FaultSet&) = default;

 private:
  FaultMode mode_;
  std::vector<std::uint32_t> members_;
};

// Dense membership flags for a FaultSet, sized to the graph so that the
// traversal inner loops do a single array lookup.
class FaultMask {
 public:
  // Blocks nothing.
  FaultMask() = default;
  FaultMask(FaultMode mode, std::size_t num_vertices, std::size_t num_edges);
  // Throws InvalidArgument if a member is out of range for `g`.
  FaultMask(const FaultSet& faults, const Graph& g);

  FaultMode mode() const { return mode_; }
  void block(std::uint32_t x);
  void unblock(std::uint32_t x);
  void clear();

  bool blocks_vertex(Vertex v) const {
    return mode_ == FaultMode::kVertex && !flags_.empty() && flags_[v] != 0;
  }
  bool blocks_edge(EdgeId e) const {
    return mode_ == FaultMode::kEdge && !flags_.empty() && flags_[e] != 0;
  }

 private:
  FaultMode mode_ = FaultMode::kVertex;
  std::vector<std::uint8_t> flags_;
};

struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  Weight weight = 0;

  std::size_t hops() const { return edges.size(); }
};

// Bounded BFS with reusable scratch space. Returns the lexicographically
// smallest (by vertex sequence from `u`) among the shortest-hop u-v paths,
// provided its hop count is at most `max_hops`. Weights are ignored except
// to fill Path::weight.
class HopBoundedSearch {
 public:
  HopBoundedSearch() = default;

  std::optional<Path> Find(const GraphView& g, Vertex u, Vertex v,
                           std::uint32_t max_hops, const FaultMask& faults);

  // Number of Find calls so far.
  std::uint64_t runs() const { return runs_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> depth_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
  std::uint32_t epoch_ = 0;
  std::uint64_t runs_ = 0;
};

// Throws InvalidArgument for out-of-range ids, u == v, or a terminal that
// is itself a deleted vertex.
std::optional<Path> HopBoundedPath(const Graph& g, Vertex u, Vertex v,
                                   std::uint32_t max_hops,
                                   const FaultSet& faults);

// Weighted shortest-path distance in g with the faults deleted, kInfinity
// when disconnected. `unit_weights` treats every edge as weight 1.
Weight Distance(const GraphView& g, Vertex u, Vertex v, const FaultMask& faults,
                bool unit_weights = false);
Weight Distance(const Graph& g, Vertex u, Vertex v, const FaultSet& faults);

// Single-source distances to every vertex; deleted vertices get kInfinity.
std::vector<Weight> DistancesFrom(const GraphView& g, Vertex source,
                                  const FaultMask& faults,
                                  bool unit_weights = false);

// Edge-list text format: '#' comment lines, a header "n m", then m lines
// "u v [w]" (w defaults to 1). Throws ParseError for malformed text and
// for structural violations, naming the offending line.
Graph LoadGraph(std::istream& in);
Graph ParseGraph(std::string_view text);

// Same format, edges in id order, weight always written.
void WriteGraph(std::ostream& out, const Graph& g);
std::string SerializeGraph(const Graph& g);

// Maps each edge of `sub` to the id of the identical edge (same endpoints
// and weight) in `g`. Throws InvalidArgument if `sub` is not a subgraph of
// `g` on the same vertex set.
std::vector<EdgeId> MatchEdges(const Graph& g, const Graph& sub);

}  // namespace ftspanner

#endif  // FTSPANNER_GRAPH_H_
