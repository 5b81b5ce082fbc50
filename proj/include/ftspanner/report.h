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


// JSON renderings of library results, shared by the CLI and the bench
// harness. Field names match the schemas under schemas/.

#ifndef FTSPANNER_REPORT_H_
#define FTSPANNER_REPORT_H_

#include <json.hpp>

#include "ftspanner/engine.h"
#include "ftspanner/gen.h"
#include "ftspanner/greedy.h"
#include "ftspanner/lbc.h"
#include "ftspanner/verify.h"

namespace ftspanner {

using Json = nlohmann::ordered_json;

Json ToJson(const FaultSet& faults);
Json ToJson(const SpannerParams& p);
Json ToJson(const GenSpec& spec);
// Build sidecar: counters and the size audit; per-edge decisions only when
// `with_decisions`.
Json ToJson(const SpannerStats& stats, const SizeAudit& audit,
            bool with_decisions);
Json ToJson(const VerifyReport& report);
Json ToJson(const LbcVerdict& verdict);
Json ToJson(const LbcExactResult& result);
Json ToJson(const SimTrace& trace);

}  // namespace ftspanner

#endif  // FTSPANNER_REPORT_H_
