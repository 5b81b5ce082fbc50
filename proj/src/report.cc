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


#include "ftspanner/report.h"

namespace ftspanner {

Json ToJson(const FaultSet& faults) {
  Json j;
  j["mode"] = ToString(faults.mode());
  j["members"] = Json::array();
  for (std::uint32_t x : faults.members()) j["members"].push_back(x);
  return j;
}

Json ToJson(const SpannerParams& p) {
  return Json{{"k", p.k}, {"f", p.f}, {"mode", ToString(p.mode)}};
}

Json ToJson(const GenSpec& spec) {
  Json j;
  j["family"] = ToString(spec.family);
  j["n"] = spec.n;
  j["seed"] = spec.seed;
  switch (spec.family) {
    case Family::kErdosRenyi:
      j["p"] = spec.p;
      break;
    case Family::kRandomGeometric:
      j["radius"] = spec.radius;
      break;
    case Family::kTheta:
      j["paths"] = spec.paths;
      j["hops"] = spec.hops;
      break;
    default:
      break;
  }
  if (spec.weights.kind == WeightModel::Kind::kUnit) {
    j["weights"] = "unit";
  } else {
    j["weights"] = Json{{"lo", spec.weights.lo}, {"hi", spec.weights.hi}};
  }
  j["largest_component"] = spec.largest_component;
  return j;
}

Json ToJson(const SpannerStats& stats, const SizeAudit& audit,
            bool with_decisions) {
  Json j;
  j["edges_kept"] = stats.edges_kept;
  j["lbc_calls"] = stats.lbc_calls;
  j["bfs_runs"] = stats.bfs_runs;
  j["size_bound"] = audit.bound_value;
  j["bound_ratio"] = audit.ratio;
  j["fault_free_bound"] = audit.fault_free_bound;
  if (with_decisions) {
    Json decisions = Json::array();
    for (const EdgeDecision& d : stats.decisions) {
      decisions.push_back({{"edge", d.edge},
                           {"kept", d.kept},
                           {"first_path_hops", d.first_path_hops}});
    }
    j["decisions"] = std::move(decisions);
  }
  return j;
}

Json ToJson(const VerifyReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["fault_sets_checked"] = report.fault_sets_checked;
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    Json cj;
    cj["fault_set"] = ToJson(c.fault_set);
    cj["u"] = c.u;
    cj["v"] = c.v;
    if (c.spanner_dist == kInfinity) {
      cj["spanner_dist"] = nullptr;
    } else {
      cj["spanner_dist"] = c.spanner_dist;
    }
    cj["required"] = c.required;
    j["counterexample"] = std::move(cj);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json ToJson(const LbcVerdict& verdict) {
  Json j;
  j["answer"] = verdict.answer == LbcAnswer::kYes ? "YES" : "NO";
  j["witness"] = verdict.witness_cut ? ToJson(*verdict.witness_cut) : Json();
  j["iterations"] = verdict.iterations_used;
  return j;
}

Json ToJson(const LbcExactResult& result) {
  Json j;
  j["min_cut_size"] = result.min_cut_size ? Json(*result.min_cut_size) : Json();
  j["cut"] = result.cut ? ToJson(*result.cut) : Json();
  return j;
}

Json ToJson(const SimTrace& trace) {
  Json j;
  j["rounds_used"] = trace.rounds_used;
  j["max_bits_on_edge_per_round"] = trace.max_bits_on_edge_per_round;
  j["messages_total"] = trace.messages_total;
  j["per_phase_rounds"] = Json::object();
  for (const auto& [name, rounds] : trace.per_phase_rounds) {
    j["per_phase_rounds"][name] = rounds;
  }
  j["attempts"] = trace.attempts;
  return j;
}

}  // namespace ftspanner
