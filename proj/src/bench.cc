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


#include "ftspanner/bench.h"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "ftspanner/distsim.h"
#include "ftspanner/errors.h"
#include "ftspanner/verify.h"

namespace ftspanner {

namespace {

constexpr std::pair<BenchAlgo, std::string_view> kAlgoNames[] = {
    {BenchAlgo::kExact, "exact"},
    {BenchAlgo::kGreedyUnweighted, "greedy-unweighted"},
    {BenchAlgo::kGreedyWeighted, "greedy-weighted"},
    {BenchAlgo::kLocal, "local"},
    {BenchAlgo::kCongest, "congest"},
    {BenchAlgo::kBaswanaSen, "baswana-sen"},
};

template <typename T>
T Get(const Json& entry, const char* key, T fallback) {
  const auto it = entry.find(key);
  if (it == entry.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw InvalidArgument(std::string("bench entry field '") + key +
                          "' has the wrong type");
  }
}

BenchEntry ParseEntry(const Json& e) {
  if (!e.is_object()) throw InvalidArgument("bench entry must be an object");
  BenchEntry out;
  if (!e.contains("family")) throw InvalidArgument("bench entry needs 'family'");
  out.spec.family = ParseFamily(Get<std::string>(e, "family", ""));
  out.spec.n = Get<std::size_t>(e, "n", 0);
  out.spec.p = Get<double>(e, "p", 0.0);
  out.spec.radius = Get<double>(e, "radius", 0.0);
  out.spec.paths = Get<std::uint32_t>(e, "paths", 0);
  out.spec.hops = Get<std::uint32_t>(e, "hops", 0);
  out.spec.largest_component = Get<bool>(e, "largest_component", false);
  if (const auto it = e.find("weights"); it != e.end()) {
    if (it->is_string() && it->get<std::string>() == "unit") {
      out.spec.weights = WeightModel::Unit();
    } else if (it->is_object()) {
      out.spec.weights = WeightModel::UniformInt(Get<Weight>(*it, "lo", 1),
                                                 Get<Weight>(*it, "hi", 1));
    } else {
      throw InvalidArgument("bench entry 'weights' must be \"unit\" or {lo, hi}");
    }
  }
  out.params.k = Get<std::uint32_t>(e, "k", 1);
  out.params.f = Get<std::uint32_t>(e, "f", 0);
  out.params.mode = ParseFaultMode(Get<std::string>(e, "mode", "vertex"));
  out.algo = ParseBenchAlgo(Get<std::string>(e, "algo", "greedy-weighted"));
  if (!e.contains("seeds")) throw InvalidArgument("bench entry needs 'seeds'");
  out.seeds = Get<std::vector<std::uint64_t>>(e, "seeds", {});
  return out;
}

}  // namespace

std::string_view ToString(BenchAlgo algo) {
  for (const auto& [a, name] : kAlgoNames) {
    if (a == algo) return name;
  }
  return "?";
}

BenchAlgo ParseBenchAlgo(std::string_view text) {
  for (const auto& [a, name] : kAlgoNames) {
    if (name == text) return a;
  }
  throw InvalidArgument("unknown algo '" + std::string(text) + "'");
}

std::vector<BenchEntry> ParseBenchSuite(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("bench suite: ") + e.what());
  }
  const Json* list = &doc;
  if (doc.is_object()) {
    const auto it = doc.find("entries");
    if (it == doc.end()) throw InvalidArgument("bench suite needs 'entries'");
    list = &*it;
  }
  if (!list->is_array()) throw InvalidArgument("bench entries must be an array");
  std::vector<BenchEntry> suite;
  for (const Json& e : *list) suite.push_back(ParseEntry(e));
  return suite;
}

BenchRecord RunBenchRecord(const BenchEntry& entry, std::uint64_t seed) {
  BenchRecord r;
  r.spec = entry.spec;
  r.spec.seed = seed;
  r.params = entry.params;
  r.algo = entry.algo;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = Generate(r.spec);
    r.n = g.num_vertices();
    r.m = g.num_edges();
    SimConfig cfg;
    cfg.seed = seed;
    switch (entry.algo) {
      case BenchAlgo::kExact:
        r.edges_kept = ExactGreedy(g, r.params).spanner_edge_ids.size();
        break;
      case BenchAlgo::kGreedyUnweighted:
        r.edges_kept =
            ModifiedGreedyUnweighted(g, r.params).spanner_edge_ids.size();
        break;
      case BenchAlgo::kGreedyWeighted:
        r.edges_kept = ModifiedGreedyWeighted(g, r.params).spanner_edge_ids.size();
        break;
      case BenchAlgo::kLocal: {
        cfg.model = Model::kLocal;
        const SimSpannerResult s = LocalFtSpanner(g, r.params, cfg);
        r.edges_kept = s.spanner.spanner_edge_ids.size();
        r.rounds_used = s.trace.rounds_used;
        break;
      }
      case BenchAlgo::kCongest: {
        cfg.model = Model::kCongest;
        const SimSpannerResult s = CongestFtSpanner(g, r.params, cfg);
        r.edges_kept = s.spanner.spanner_edge_ids.size();
        r.rounds_used = s.trace.rounds_used;
        break;
      }
      case BenchAlgo::kBaswanaSen: {
        if (r.params.f != 0) throw InvalidArgument("baswana-sen needs f = 0");
        cfg.model = Model::kCongest;
        const SimSpannerResult s = BaswanaSen(g, r.params.k, cfg);
        r.edges_kept = s.spanner.spanner_edge_ids.size();
        r.rounds_used = s.trace.rounds_used;
        break;
      }
    }
    r.bound_ratio = AuditSize(r.n, r.edges_kept, r.params).ratio;
  } catch (const GuardExceeded& e) {
    r.error = e.what();
    r.error_kind = "guard";
  } catch (const SimulationError& e) {
    r.error = e.what();
    r.error_kind = "simulation";
  } catch (const Error& e) {
    r.error = e.what();
    r.error_kind = "invalid";
  }
  if (r.error) {
    r.edges_kept = 0;
    r.bound_ratio = 0;
    r.rounds_used.reset();
  }
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

void RunBench(const std::vector<BenchEntry>& suite, const BenchOptions& options,
              const std::function<void(const BenchRecord&)>& sink) {
  std::vector<std::pair<const BenchEntry*, std::uint64_t>> jobs;
  for (const BenchEntry& e : suite) {
    for (std::uint64_t seed : e.seeds) jobs.push_back({&e, seed});
  }
  auto run = [&](std::size_t i) {
    BenchRecord r = RunBenchRecord(*jobs[i].first, jobs[i].second);
    if (options.no_timing) r.wall_time_ms = 0;
    return r;
  };
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) sink(run(i));
    return;
  }

  std::vector<std::optional<BenchRecord>> done(jobs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const std::size_t count = std::min(options.jobs, std::max<std::size_t>(jobs.size(), 1));
    for (std::size_t w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
          BenchRecord r = run(i);
          std::lock_guard lock(mu);
          done[i] = std::move(r);
          ready.notify_all();
        }
      });
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value(); });
      BenchRecord r = std::move(*done[i]);
      done[i].reset();
      lock.unlock();
      sink(r);
    }
  }
}

Json ToJson(const BenchRecord& r) {
  Json j;
  j["spec"] = ToJson(r.spec);
  j["params"] = ToJson(r.params);
  j["algo"] = ToString(r.algo);
  j["n"] = r.n;
  j["m"] = r.m;
  j["edges_kept"] = r.edges_kept;
  j["bound_ratio"] = r.bound_ratio;
  j["wall_time_ms"] = r.wall_time_ms;
  j["rounds_used"] = r.rounds_used ? Json(*r.rounds_used) : Json();
  j["error"] = r.error ? Json(*r.error) : Json();
  j["error_kind"] = r.error_kind ? Json(*r.error_kind) : Json();
  return j;
}

void WriteCsvHeader(std::ostream& out) {
  out << "family,n_requested,seed,p,radius,paths,hops,k,f,mode,algo,n,m,"
         "edges_kept,bound_ratio,wall_time_ms,rounds_used,error_kind\n";
}

void WriteCsvRow(std::ostream& out, const BenchRecord& r) {
  out << ToString(r.spec.family) << ',' << r.spec.n << ',' << r.spec.seed << ','
      << r.spec.p << ',' << r.spec.radius << ',' << r.spec.paths << ','
      << r.spec.hops << ',' << r.params.k << ',' << r.params.f << ','
      << ToString(r.params.mode) << ',' << ToString(r.algo) << ',' << r.n << ','
      << r.m << ',' << r.edges_kept << ',' << r.bound_ratio << ','
      << r.wall_time_ms << ',';
  if (r.rounds_used) out << *r.rounds_used;
  out << ',';
  if (r.error_kind) out << *r.error_kind;
  out << '\n';
}

}  // namespace ftspanner
