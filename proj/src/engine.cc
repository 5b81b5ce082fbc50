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

#include "ftspanner/engine.h"

#include <algorithm>
#include <tuple>

#include "ftspanner/errors.h"

namespace ftspanner {

std::string_view ToString(Model model) {
  return model == Model::kLocal ? "local" : "congest";
}

Model ParseModel(std::string_view text) {
  if (text == "local") return Model::kLocal;
  if (text == "congest") return Model::kCongest;
  throw InvalidArgument("unknown model '" + std::string(text) + "'");
}

std::uint32_t BitsFor(std::uint64_t count) {
  std::uint32_t bits = 1;
  while (bits < 64 && (std::uint64_t{1} << bits) < count) ++bits;
  return bits;
}

namespace {

void CheckFits(std::uint64_t value, std::uint32_t width) {
  if (width == 0 || width > 64 || (width < 64 && (value >> width) != 0)) {
    throw SimulationError("value " + std::to_string(value) +
                          " does not fit in " + std::to_string(width) +
                          " bits");
  }
}

}  // namespace

MessageBuilder& MessageBuilder::Tag(std::uint32_t tag, std::uint32_t width) {
  CheckFits(tag, width);
  msg_.tag = tag;
  msg_.bits += width;
  return *this;
}

MessageBuilder& MessageBuilder::Field(std::uint64_t value,
                                      std::uint32_t width) {
  CheckFits(value, width);
  if (msg_.num_fields == msg_.fields.size()) {
    throw SimulationError("too many message fields");
  }
  msg_.fields[msg_.num_fields++] = value;
  msg_.bits += width;
  return *this;
}

MessageBuilder& MessageBuilder::Record(std::uint64_t value,
                                       std::uint32_t width) {
  CheckFits(value, width);
  msg_.records.push_back(value);
  msg_.bits += width;
  return *this;
}

RoundEngine::RoundEngine(const Graph& g, Model model, std::uint64_t word_bits,
                         std::uint64_t max_rounds)
    : graph_(&g),
      model_(model),
      word_bits_(word_bits),
      max_rounds_(max_rounds),
      outbox_(g.num_vertices()),
      inbox_(g.num_vertices()),
      bits_this_round_(2 * g.num_edges(), 0) {}

void RoundEngine::Send(Vertex from, EdgeId edge, Message msg) {
  if (edge >= graph_->num_edges()) {
    throw SimulationError("send on unknown edge " + std::to_string(edge));
  }
  const Edge& e = graph_->edge(edge);
  if (e.u != from && e.v != from) {
    throw SimulationError("vertex " + std::to_string(from) +
                          " is not an endpoint of edge " +
                          std::to_string(edge));
  }
  const std::size_t slot = 2 * std::size_t{edge} + (from == e.u ? 0 : 1);
  if (bits_this_round_[slot] == 0) touched_.push_back(slot);
  bits_this_round_[slot] += msg.bits;
  const std::uint64_t used = bits_this_round_[slot];
  const std::uint64_t cap =
      model_ == Model::kCongest ? word_bits_ : kLocalMessageBitCap;
  if (used > cap) {
    throw SimulationError(
        std::string(ToString(model_)) + " budget exceeded on edge " +
        std::to_string(edge) + " in round " + std::to_string(clock_ + 1) +
        ": " + std::to_string(used) + " bits > " + std::to_string(cap));
  }
  max_bits_ = std::max(max_bits_, used);
  ++messages_;
  ++pending_count_;
  outbox_[e.other(from)].push_back({from, edge, std::move(msg)});
}

void RoundEngine::Deliver() {
  if (clock_ + 1 > max_rounds_) {
    throw SimulationError("round cap of " + std::to_string(max_rounds_) +
                          " exceeded");
  }
  ++clock_;
  if (pending_count_ > 0) last_active_ = clock_;
  for (std::size_t v = 0; v < outbox_.size(); ++v) {
    auto& box = outbox_[v];
    std::sort(box.begin(), box.end(),
              [](const Envelope& a, const Envelope& b) {
                return std::tie(a.from, a.edge, a.msg.tag) <
                       std::tie(b.from, b.edge, b.msg.tag);
              });
    inbox_[v].swap(box);
    box.clear();
  }
  for (std::size_t slot : touched_) bits_this_round_[slot] = 0;
  touched_.clear();
  pending_count_ = 0;
}

void RoundEngine::Idle(std::uint64_t rounds) {
  if (pending_count_ > 0) {
    throw SimulationError("idle round with messages in flight");
  }
  if (clock_ + rounds > max_rounds_) {
    throw SimulationError("round cap of " + std::to_string(max_rounds_) +
                          " exceeded");
  }
  clock_ += rounds;
  for (auto& box : inbox_) box.clear();
}

void RoundEngine::BeginPhase(std::string name) {
  if (!phase_.empty()) EndPhase();
  clock_ = last_active_;
  phase_ = std::move(name);
  phase_start_ = clock_;
  per_phase_.try_emplace(phase_, 0);
}

void RoundEngine::EndPhase() {
  if (phase_.empty()) return;
  per_phase_[phase_] += last_active_ - phase_start_;
  phase_.clear();
  clock_ = last_active_;
}

SimTrace RoundEngine::trace() const {
  SimTrace t;
  t.rounds_used = last_active_;
  t.max_bits_on_edge_per_round = max_bits_;
  t.messages_total = messages_;
  t.per_phase_rounds = per_phase_;
  if (!phase_.empty()) {
    t.per_phase_rounds[phase_] += last_active_ - phase_start_;
  }
  return t;
}

}  // namespace ftspanner
