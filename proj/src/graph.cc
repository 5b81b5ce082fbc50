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

#include "ftspanner/graph.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <utility>

#include "ftspanner/errors.h"

namespace ftspanner {

Weight SaturatingAdd(Weight a, Weight b) {
  return a > kInfinity - b ? kInfinity : a + b;
}

Weight SaturatingMul(Weight a, Weight b) {
  if (a == 0 || b == 0) return 0;
  return a > kInfinity / b ? kInfinity : a * b;
}

std::string_view ToString(FaultMode mode) {
  return mode == FaultMode::kVertex ? "vertex" : "edge";
}

FaultMode ParseFaultMode(std::string_view text) {
  if (text == "vertex") return FaultMode::kVertex;
  if (text == "edge") return FaultMode::kEdge;
  throw InvalidArgument("unknown fault mode '" + std::string(text) + "'");
}

namespace {

void InsertSorted(std::vector<Incidence>& list, Incidence inc) {
  auto it = std::lower_bound(
      list.begin(), list.end(), inc.to,
      [](const Incidence& a, Vertex to) { return a.to < to; });
  list.insert(it, inc);
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const EdgeSpec> edges)
    : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    const auto id = static_cast<EdgeId>(edges_.size());
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge " + std::to_string(id) + " has endpoint >= " +
                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidArgument("edge " + std::to_string(id) + " is a self-loop");
    }
    edges_.push_back({e.u, e.v, e.w, id});
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) {
                return a.to < b.to;
              });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].to == list[i - 1].to) {
        const Edge& dup = edges_[std::max(list[i].edge, list[i - 1].edge)];
        throw InvalidArgument("edge " + std::to_string(dup.id) +
                              " duplicates {" + std::to_string(dup.u) + "," +
                              std::to_string(dup.v) + "}");
      }
    }
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Incidence& a, Vertex to) { return a.to < to; });
  if (it == list.end() || it->to != v) return std::nullopt;
  return it->edge;
}

bool Graph::is_unit_weight() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w == 1; });
}

Graph Graph::EdgeSubgraph(std::span<const EdgeId> ids) const {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<EdgeSpec> specs;
  specs.reserve(sorted.size());
  for (EdgeId id : sorted) {
    if (id >= num_edges()) {
      throw InvalidArgument("edge id " + std::to_string(id) + " out of range");
    }
    const Edge& e = edges_[id];
    specs.push_back({e.u, e.v, e.w});
  }
  return Graph(num_vertices(), specs);
}

Subgraph::Subgraph(const Graph& parent)
    : parent_(&parent),
      adjacency_(parent.num_vertices()),
      present_(parent.num_edges(), 0) {}

Subgraph::Subgraph(const Graph& parent, std::span<const EdgeId> ids)
    : Subgraph(parent) {
  for (EdgeId id : ids) add_edge(id);
}

void Subgraph::add_edge(EdgeId id) {
  if (id >= present_.size()) {
    throw InvalidArgument("edge id " + std::to_string(id) + " out of range");
  }
  if (present_[id]) return;
  present_[id] = 1;
  ++count_;
  const Edge& e = parent_->edge(id);
  InsertSorted(adjacency_[e.u], {e.v, id});
  InsertSorted(adjacency_[e.v], {e.u, id});
}

std::vector<EdgeId> Subgraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(count_);
  for (EdgeId id = 0; id < present_.size(); ++id) {
    if (present_[id]) ids.push_back(id);
  }
  return ids;
}

FaultSet::FaultSet(FaultMode mode, std::vector<std::uint32_t> members)
    : mode_(mode), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool FaultSet::contains(std::uint32_t x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

void FaultSet::insert(std::uint32_t x) {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) members_.insert(it, x);
}

FaultMask::FaultMask(FaultMode mode, std::size_t num_vertices,
                     std::size_t num_edges)
    : mode_(mode),
      flags_(mode == FaultMode::kVertex ? num_vertices : num_edges, 0) {}

FaultMask::FaultMask(const FaultSet& faults, const Graph& g)
    : FaultMask(faults.mode(), g.num_vertices(), g.num_edges()) {
  for (std::uint32_t x : faults.members()) {
    if (x >= flags_.size()) {
      throw InvalidArgument(std::string("fault ") +
                            std::string(ToString(faults.mode())) + " " +
                            std::to_string(x) + " out of range");
    }
    flags_[x] = 1;
  }
}

void FaultMask::block(std::uint32_t x) { flags_.at(x) = 1; }
void FaultMask::unblock(std::uint32_t x) { flags_.at(x) = 0; }
void FaultMask::clear() { std::fill(flags_.begin(), flags_.end(), 0); }

std::optional<Path> HopBoundedSearch::Find(const GraphView& g, Vertex u,
                                           Vertex v, std::uint32_t max_hops,
                                           const FaultMask& faults) {
  ++runs_;
  const std::size_t n = g.num_vertices();
  if (u == v) return Path{{u}, {}, 0};
  if (stamp_.size() != n) {
    stamp_.assign(n, 0);
    depth_.assign(n, 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }

  // Layered BFS from v, stopping at the layer that reaches u.
  frontier_.clear();
  frontier_.push_back(v);
  stamp_[v] = epoch_;
  depth_[v] = 0;
  bool found = false;
  for (std::uint32_t d = 0; d < max_hops && !frontier_.empty() && !found;
       ++d) {
    next_.clear();
    for (Vertex x : frontier_) {
      for (const Incidence& inc : g.neighbors(x)) {
        if (stamp_[inc.to] == epoch_ || faults.blocks_edge(inc.edge) ||
            faults.blocks_vertex(inc.to)) {
          continue;
        }
        stamp_[inc.to] = epoch_;
        depth_[inc.to] = d + 1;
        if (inc.to == u) found = true;
        next_.push_back(inc.to);
      }
    }
    frontier_.swap(next_);
  }
  if (!found) return std::nullopt;

  // Every vertex closer to v than u is stamped, so stepping to the smallest
  // neighbor one layer down yields the lexicographically first path.
  Path path;
  path.vertices.push_back(u);
  Vertex cur = u;
  while (cur != v) {
    const std::uint32_t want = depth_[cur] - 1;
    for (const Incidence& inc : g.neighbors(cur)) {
      if (stamp_[inc.to] != epoch_ || depth_[inc.to] != want ||
          faults.blocks_edge(inc.edge) || faults.blocks_vertex(inc.to)) {
        continue;
      }
      path.vertices.push_back(inc.to);
      path.edges.push_back(inc.edge);
      path.weight = SaturatingAdd(path.weight, g.edge(inc.edge).w);
      cur = inc.to;
      break;
    }
  }
  return path;
}

namespace {

void CheckVertex(const Graph& g, Vertex x) {
  if (x >= g.num_vertices()) {
    throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
  }
}

void CheckTerminals(const Graph& g, Vertex u, Vertex v,
                    const FaultSet& faults) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  if (faults.mode() == FaultMode::kVertex &&
      (faults.contains(u) || faults.contains(v))) {
    throw InvalidArgument("terminal is in the fault set");
  }
}

}  // namespace

std::optional<Path> HopBoundedPath(const Graph& g, Vertex u, Vertex v,
                                   std::uint32_t max_hops,
                                   const FaultSet& faults) {
  CheckTerminals(g, u, v, faults);
  if (u == v) throw InvalidArgument("terminals must differ");
  HopBoundedSearch search;
  return search.Find(g.view(), u, v, max_hops, FaultMask(faults, g));
}

namespace {

// Dijkstra; stops early once `target` is settled when one is given.
std::vector<Weight> Dijkstra(const GraphView& g, Vertex source,
                             const FaultMask& faults, bool unit_weights,
                             std::optional<Vertex> target) {
  const std::size_t n = g.num_vertices();
  std::vector<Weight> dist(n, kInfinity);
  if (faults.blocks_vertex(source)) return dist;
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0;
  queue.push({0, source});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d != dist[x]) continue;
    if (target && x == *target) break;
    for (const Incidence& inc : g.neighbors(x)) {
      if (faults.blocks_edge(inc.edge) || faults.blocks_vertex(inc.to)) {
        continue;
      }
      const Weight w = unit_weights ? 1 : g.edge(inc.edge).w;
      const Weight nd = SaturatingAdd(d, w);
      if (nd < dist[inc.to]) {
        dist[inc.to] = nd;
        queue.push({nd, inc.to});
      }
    }
  }
  return dist;
}

}  // namespace

Weight Distance(const GraphView& g, Vertex u, Vertex v, const FaultMask& faults,
                bool unit_weights) {
  if (u == v) return 0;
  return Dijkstra(g, u, faults, unit_weights, v)[v];
}

Weight Distance(const Graph& g, Vertex u, Vertex v, const FaultSet& faults) {
  CheckTerminals(g, u, v, faults);
  return Distance(g.view(), u, v, FaultMask(faults, g));
}

std::vector<Weight> DistancesFrom(const GraphView& g, Vertex source,
                                  const FaultMask& faults, bool unit_weights) {
  return Dijkstra(g, source, faults, unit_weights, std::nullopt);
}

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long ParseInteger(std::string_view token, std::size_t line_no,
                       const char* what) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" +
                                  std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph LoadGraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Graph::EdgeSpec> specs;
  std::vector<std::size_t> spec_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected header 'n m'");
      }
      n = ParseInteger(tokens[0], line_no, "vertex count");
      m = ParseInteger(tokens[1], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
      if (n > std::numeric_limits<Vertex>::max() ||
          m > std::numeric_limits<EdgeId>::max()) {
        throw ParseError(line_no, "count too large");
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(specs.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header declares");
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no, "expected 'u v [w]'");
    }
    const long long u = ParseInteger(tokens[0], line_no, "vertex id");
    const long long v = ParseInteger(tokens[1], line_no, "vertex id");
    const long long w =
        tokens.size() == 3 ? ParseInteger(tokens[2], line_no, "weight") : 1;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " +
                                    std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop");
    if (w < 0) throw ParseError(line_no, "negative weight");
    specs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                     static_cast<Weight>(w)});
    spec_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(0, "missing header 'n m'");
  if (static_cast<long long>(specs.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(specs.size()));
  }
  try {
    return Graph(static_cast<std::size_t>(n), specs);
  } catch (const InvalidArgument&) {
    // Only duplicates remain possible; locate the first one.
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> keys;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      keys.push_back({{std::min(specs[i].u, specs[i].v),
                       std::max(specs[i].u, specs[i].v)},
                      i});
    }
    std::sort(keys.begin(), keys.end());
    std::size_t worst = specs.size();
    for (std::size_t i = 1; i < keys.size(); ++i) {
      if (keys[i].first == keys[i - 1].first) {
        worst = std::min(worst, keys[i].second);
      }
    }
    throw ParseError(worst < specs.size() ? spec_lines[worst] : 0,
                     "duplicate edge");
  }
}

Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadGraph(in);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  }
}

std::string SerializeGraph(const Graph& g) {
  std::ostringstream out;
  WriteGraph(out, g);
  return out.str();
}

std::vector<EdgeId> MatchEdges(const Graph& g, const Graph& sub) {
  if (sub.num_vertices() != g.num_vertices()) {
    throw InvalidArgument("subgraph has " + std::to_string(sub.num_vertices()) +
                          " vertices, graph has " +
                          std::to_string(g.num_vertices()));
  }
  std::vector<EdgeId> ids;
  ids.reserve(sub.num_edges());
  for (const Edge& e : sub.edges()) {
    auto id = g.find_edge(e.u, e.v);
    if (!id || g.edge(*id).w != e.w) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} w=" +
                            std::to_string(e.w) + " is not in the graph");
    }
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace ftspanner
