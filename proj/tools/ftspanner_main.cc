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


// ftspanner: build, verify and simulate fault-tolerant spanners.
//
// Exit codes: 0 success, 1 verification (or simulation) failure, 2 usage
// or input error, 3 guard exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ftspanner/bench.h"
#include "ftspanner/distsim.h"
#include "ftspanner/errors.h"
#include "ftspanner/gen.h"
#include "ftspanner/graph.h"
#include "ftspanner/greedy.h"
#include "ftspanner/lbc.h"
#include "ftspanner/report.h"
#include "ftspanner/verify.h"

namespace ftspanner {
namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kGuard = 3 };

Graph ReadGraphFile(const std::string& path) {
  if (path == "-") return LoadGraph(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return LoadGraph(in);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// Writes `text` to `out_path`, or to stdout when it is empty.
void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(out_path, text);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

struct ParamFlags {
  std::uint32_t k = 1;
  std::uint32_t f = 0;
  std::string mode = "vertex";

  void Attach(CLI::App* app) {
    app->add_option("--k", k, "stretch parameter; stretch is 2k-1")
        ->capture_default_str();
    app->add_option("--f", f, "fault budget")->capture_default_str();
    app->add_option("--mode", mode, "fault mode")
        ->check(CLI::IsMember({"vertex", "edge"}))
        ->capture_default_str();
  }
  SpannerParams Get() const { return {k, f, ParseFaultMode(mode)}; }
};

// --- gen -------------------------------------------------------------------

struct GenCommand {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  double radius = 0.0;
  std::uint32_t paths = 0;
  std::uint32_t hops = 0;
  std::string weights = "unit";
  bool largest_component = false;
  std::string out;

  void Attach(CLI::App* app) {
    app->add_option("--family", family, "graph family")
        ->required()
        ->check(CLI::IsMember({"complete", "cycle", "path", "star", "grid",
                               "erdos-renyi", "random-geometric", "theta"}));
    app->add_option("--n", n, "vertex count");
    app->add_option("--seed", seed, "generator seed");
    app->add_option("--p", p, "edge probability (erdos-renyi)");
    app->add_option("--radius", radius, "connection radius (random-geometric)");
    app->add_option("--paths", paths, "parallel paths (theta)");
    app->add_option("--hops", hops, "hops per path (theta)");
    app->add_option("--weights", weights, "'unit' or 'lo:hi'")
        ->capture_default_str();
    app->add_flag("--largest-component", largest_component,
                  "keep only the largest connected component");
    app->add_option("--out", out, "output file (default stdout)");
  }

  GenSpec Spec() const {
    GenSpec spec;
    spec.family = ParseFamily(family);
    spec.n = n;
    spec.seed = seed;
    spec.p = p;
    spec.radius = radius;
    spec.paths = paths;
    spec.hops = hops;
    spec.largest_component = largest_component;
    if (weights != "unit") {
      const auto colon = weights.find(':');
      if (colon == std::string::npos) {
        throw InvalidArgument("--weights must be 'unit' or 'lo:hi'");
      }
      try {
        spec.weights = WeightModel::UniformInt(
            std::stoull(weights.substr(0, colon)),
            std::stoull(weights.substr(colon + 1)));
      } catch (const std::logic_error&) {
        throw InvalidArgument("--weights must be 'unit' or 'lo:hi'");
      }
    }
    return spec;
  }

  int Run() const {
    Emit(out, SerializeGraph(Generate(Spec())));
    return kOk;
  }
};

// --- build -----------------------------------------------------------------

struct BuildCommand {
  std::string graph;
  std::string out;
  std::string stats;
  bool json = false;
  bool decisions = false;
  ParamFlags params;
  std::string algo = "greedy-weighted";
  std::string order = "id";

  void Attach(CLI::App* app) {
    app->add_option("--graph", graph, "input edge list ('-' for stdin)")
        ->required();
    app->add_option("--out", out, "spanner edge list (default stdout)");
    app->add_option("--stats", stats,
                    "JSON stats sidecar (default <out>.json when --out is set)");
    app->add_flag("--json", json, "also print the stats JSON on stdout");
    app->add_flag("--decisions", decisions,
                  "include per-edge decisions in the stats");
    params.Attach(app);
    app->add_option("--algo", algo, "construction")
        ->check(CLI::IsMember({"exact", "greedy-unweighted", "greedy-weighted"}))
        ->capture_default_str();
    app->add_option("--order", order,
                    "edge order for greedy-unweighted: id or random:<seed>")
        ->capture_default_str();
  }

  int Run() const {
    if (json && out.empty()) {
      throw InvalidArgument("--json needs --out so stdout carries only JSON");
    }
    const Graph g = ReadGraphFile(graph);
    const SpannerParams p = params.Get();
    std::vector<EdgeId> edge_order;
    if (order.rfind("random:", 0) == 0) {
      if (algo != "greedy-unweighted") {
        throw InvalidArgument("--order random:<seed> needs --algo greedy-unweighted");
      }
      std::uint64_t seed = 0;
      try {
        seed = std::stoull(order.substr(7));
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad --order '" + order + "'");
      }
      edge_order = RandomEdgeOrder(g.num_edges(), seed);
    } else if (order != "id") {
      throw InvalidArgument("bad --order '" + order + "'");
    }

    SpannerResult r;
    if (algo == "exact") {
      r = ExactGreedy(g, p);
    } else if (algo == "greedy-unweighted") {
      r = ModifiedGreedyUnweighted(g, p, edge_order);
    } else {
      r = ModifiedGreedyWeighted(g, p);
    }
    Emit(out, SerializeGraph(g.EdgeSubgraph(r.spanner_edge_ids)));

    Json sidecar;
    sidecar["algo"] = algo;
    sidecar["params"] = ToJson(p);
    sidecar["n"] = g.num_vertices();
    sidecar["m"] = g.num_edges();
    sidecar["stats"] = ToJson(
        r.stats, AuditSize(g.num_vertices(), r.spanner_edge_ids.size(), p),
        decisions);
    std::string sidecar_path = stats;
    if (sidecar_path.empty() && !out.empty()) sidecar_path = out + ".json";
    if (!sidecar_path.empty()) WriteTextFile(sidecar_path, Dump(sidecar));
    if (json) std::cout << Dump(sidecar);
    return kOk;
  }
};

// --- verify ----------------------------------------------------------------

struct VerifyCommand {
  std::string graph;
  std::string spanner;
  ParamFlags params;
  bool by_definition = false;

  void Attach(CLI::App* app) {
    app->add_option("--graph", graph, "input edge list")->required();
    app->add_option("--spanner", spanner, "spanner edge list")->required();
    params.Attach(app);
    app->add_flag("--json", "accepted for uniformity; the report is JSON");
    app->add_flag("--by-definition", by_definition,
                  "check every pair instead of the edge reduction");
  }

  int Run() const {
    const Graph g = ReadGraphFile(graph);
    const Graph h = ReadGraphFile(spanner);
    const std::vector<EdgeId> ids = MatchEdges(g, h);
    const SpannerParams p = params.Get();
    const VerifyReport report = by_definition ? VerifyByDefinition(g, ids, p)
                                              : VerifyFtSpanner(g, ids, p);
    std::cout << Dump(ToJson(report));
    return report.valid ? kOk : kFailure;
  }
};

// --- lbc -------------------------------------------------------------------

struct LbcCommand {
  std::string graph;
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t t = 1;
  std::uint32_t alpha = 0;
  std::string mode = "vertex";
  bool exact = false;

  void Attach(CLI::App* app) {
    app->add_option("--graph", graph, "input edge list")->required();
    app->add_option("--u", u, "first terminal")->required();
    app->add_option("--v", v, "second terminal")->required();
    app->add_option("--t", t, "hop bound")->required();
    app->add_option("--alpha", alpha, "cut size threshold")->required();
    app->add_option("--mode", mode, "cut mode")
        ->check(CLI::IsMember({"vertex", "edge"}))
        ->capture_default_str();
    app->add_flag("--exact", exact, "also report the exact minimum cut");
    app->add_flag("--json", "accepted for uniformity; the verdict is JSON");
  }

  int Run() const {
    const Graph g = ReadGraphFile(graph);
    const LbcInstance inst{g.view(), u, v, t, alpha, ParseFaultMode(mode)};
    Json j = ToJson(LbcGapDecide(inst));
    if (exact) j["exact"] = ToJson(LbcExact(inst));
    std::cout << Dump(j);
    return kOk;
  }
};

// --- simulate --------------------------------------------------------------

struct SimulateCommand {
  std::string graph;
  std::string out;
  std::string trace;
  bool json = false;
  ParamFlags params;
  std::string model = "local";
  std::uint64_t seed = 0;
  std::uint64_t word_bits = 0;
  std::uint32_t retries = 3;
  std::string cluster_algo = "greedy";

  void Attach(CLI::App* app) {
    app->add_option("--graph", graph, "input edge list")->required();
    app->add_option("--out", out, "spanner edge list (default stdout)");
    app->add_option("--trace", trace,
                    "JSON trace file (default <out>.json when --out is set)");
    app->add_flag("--json", json, "also print the trace JSON on stdout");
    params.Attach(app);
    app->add_option("--model", model, "network model")
        ->check(CLI::IsMember({"local", "congest"}))
        ->capture_default_str();
    app->add_option("--seed", seed, "randomness seed")->capture_default_str();
    app->add_option("--word-bits", word_bits,
                    "CONGEST word budget (0 = default)")
        ->capture_default_str();
    app->add_option("--retries", retries, "retries after a whp failure")
        ->capture_default_str();
    app->add_option("--cluster-algo", cluster_algo,
                    "LOCAL per-cluster construction")
        ->check(CLI::IsMember({"greedy", "exact"}))
        ->capture_default_str();
  }

  int Run() const {
    if (json && out.empty()) {
      throw InvalidArgument("--json needs --out so stdout carries only JSON");
    }
    const Graph g = ReadGraphFile(graph);
    const SpannerParams p = params.Get();
    SimConfig cfg;
    cfg.model = ParseModel(model);
    cfg.seed = seed;
    cfg.word_bits = word_bits;
    cfg.retries = retries;
    cfg.cluster_algorithm = cluster_algo == "exact"
                                ? ClusterAlgorithm::kExactGreedy
                                : ClusterAlgorithm::kModifiedGreedy;
    std::string algorithm;
    SimSpannerResult r;
    if (cfg.model == Model::kLocal) {
      algorithm = "local";
      r = LocalFtSpanner(g, p, cfg);
    } else if (p.f == 0) {
      algorithm = "baswana-sen";
      r = BaswanaSen(g, p.k, cfg);
    } else {
      algorithm = "congest";
      r = CongestFtSpanner(g, p, cfg);
    }
    Emit(out, SerializeGraph(g.EdgeSubgraph(r.spanner.spanner_edge_ids)));

    Json j;
    j["algo"] = algorithm;
    j["model"] = ToString(cfg.model);
    j["params"] = ToJson(p);
    j["seed"] = seed;
    j["word_bits"] = EffectiveWordBits(cfg, g.num_vertices());
    j["edges_kept"] = r.spanner.spanner_edge_ids.size();
    j["trace"] = ToJson(r.trace);
    std::string trace_path = trace;
    if (trace_path.empty() && !out.empty()) trace_path = out + ".json";
    if (!trace_path.empty()) WriteTextFile(trace_path, Dump(j));
    if (json) std::cout << Dump(j);
    return kOk;
  }
};

// --- bench -----------------------------------------------------------------

struct BenchCommand {
  std::string suite;
  std::string out;
  bool csv = false;
  std::size_t jobs = 1;
  bool no_timing = false;

  void Attach(CLI::App* app) {
    app->add_option("suite,--suite", suite, "suite JSON file")->required();
    app->add_option("--out", out, "output file (default stdout)");
    app->add_flag("--csv", csv, "CSV instead of JSON lines");
    app->add_flag("--json", "accepted for uniformity; JSON lines is the default");
    app->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    app->add_flag("--no-timing", no_timing, "report wall_time_ms as 0");
  }

  int Run() const {
    const std::vector<BenchEntry> entries = ParseBenchSuite(ReadTextFile(suite));
    std::ofstream file;
    if (!out.empty()) {
      file.open(out);
      if (!file) throw InvalidArgument("cannot write '" + out + "'");
    }
    std::ostream& sink = out.empty() ? std::cout : file;
    if (csv) WriteCsvHeader(sink);
    RunBench(entries, {jobs, no_timing}, [&](const BenchRecord& r) {
      if (csv) {
        WriteCsvRow(sink, r);
      } else {
        sink << ToJson(r).dump() << '\n';
      }
      sink.flush();
    });
    return kOk;
  }
};

int Main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant graph spanners: construction, verification, "
               "and distributed simulation"};
  app.require_subcommand(1);
  GenCommand gen;
  BuildCommand build;
  VerifyCommand verify;
  LbcCommand lbc;
  SimulateCommand simulate;
  BenchCommand bench;
  gen.Attach(app.add_subcommand("gen", "generate a graph"));
  build.Attach(app.add_subcommand("build", "build a fault-tolerant spanner"));
  verify.Attach(app.add_subcommand("verify", "check a spanner by brute force"));
  lbc.Attach(app.add_subcommand("lbc", "length-bounded cut decision"));
  simulate.Attach(app.add_subcommand("simulate", "run a distributed construction"));
  bench.Attach(app.add_subcommand("bench", "run a benchmark suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("gen")) return gen.Run();
    if (app.got_subcommand("build")) return build.Run();
    if (app.got_subcommand("verify")) return verify.Run();
    if (app.got_subcommand("lbc")) return lbc.Run();
    if (app.got_subcommand("simulate")) return simulate.Run();
    return bench.Run();
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const SimulationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace
}  // namespace ftspanner

int main(int argc, char** argv) { return ftspanner::Main(argc, argv); }
