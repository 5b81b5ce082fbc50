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

// Round-synchronous message passing over the edges of a Graph.
//
// A round is: every node reads its inbox and queues messages with Send(),
// then Deliver() moves all queued messages into the receivers' inboxes.
// Each message declares its size in bits field by field; in the CONGEST
// model the bits sent in one direction of an edge within one round may not
// exceed the word budget, and a violation throws SimulationError at send
// time.

#ifndef FTSPANNER_ENGINE_H_
#define FTSPANNER_ENGINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ftspanner/graph.h"

namespace ftspanner {

enum class Model { kLocal, kCongest };

std::string_view ToString(Model model);
Model ParseModel(std::string_view text);

// Bits needed to write any value in [0, count), at least 1.
std::uint32_t BitsFor(std::uint64_t count);

// Diagnostic cap on a single LOCAL-model message.
inline constexpr std::uint64_t kLocalMessageBitCap = std::uint64_t{1} << 30;

struct Message {
  // Multiplexing tag (iteration number); 0 when unused.
  std::uint32_t tag = 0;
  std::array<std::uint64_t, 4> fields{};
  std::uint8_t num_fields = 0;
  // Variable-length record list; each record is charged separately.
  std::vector<std::uint64_t> records;
  std::uint64_t bits = 0;
};

// Builds a Message while charging bits. Every value must fit in its
// declared width; otherwise SimulationError.
class MessageBuilder {
 public:
  MessageBuilder& Tag(std::uint32_t tag, std::uint32_t width);
  MessageBuilder& Field(std::uint64_t value, std::uint32_t width);
  // Appends a record charged at `width` bits.
  MessageBuilder& Record(std::uint64_t value, std::uint32_t width);
  Message Build() { return std::move(msg_); }

 private:
  Message msg_;
};

struct Envelope {
  Vertex from;
  EdgeId edge;
  Message msg;
};

struct SimTrace {
  // Rounds up to and including the last round that delivered a message.
  std::uint64_t rounds_used = 0;
  std::uint64_t max_bits_on_edge_per_round = 0;
  std::uint64_t messages_total = 0;
  std::map<std::string, std::uint64_t> per_phase_rounds;
  // Randomized constructions: 1 + number of retries consumed.
  std::uint32_t attempts = 1;

  friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

class RoundEngine {
 public:
  RoundEngine(const Graph& g, Model model, std::uint64_t word_bits,
              std::uint64_t max_rounds);

  const Graph& graph() const { return *graph_; }
  Model model() const { return model_; }
  std::uint64_t word_bits() const { return word_bits_; }

  // Queues `msg` from `from` over incident edge `edge`. Throws
  // SimulationError on a non-incident edge or a budget violation.
  void Send(Vertex from, EdgeId edge, Message msg);

  // Ends the round. Inboxes are replaced by the newly delivered messages,
  // sorted by (sender, edge, tag). Throws SimulationError past max_rounds.
  void Deliver();

  // Advances the clock without traffic.
  void Idle(std::uint64_t rounds);

  std::span<const Envelope> inbox(Vertex v) const { return inbox_[v]; }
  std::vector<Envelope> TakeInbox(Vertex v) { return std::move(inbox_[v]); }

  // Phases partition the clock for reporting. Trailing rounds without
  // traffic are not charged to a phase.
  void BeginPhase(std::string name);
  void EndPhase();

  std::uint64_t clock() const { return clock_; }
  std::size_t pending() const { return pending_count_; }

  SimTrace trace() const;

 private:
  const Graph* graph_;
  Model model_;
  std::uint64_t word_bits_;
  std::uint64_t max_rounds_;

  std::vector<std::vector<Envelope>> outbox_;  // by receiver
  std::vector<std::vector<Envelope>> inbox_;
  std::vector<std::uint64_t> bits_this_round_;  // by 2*edge + direction
  std::vector<std::size_t> touched_;
  std::size_t pending_count_ = 0;

  std::uint64_t clock_ = 0;
  std::uint64_t last_active_ = 0;
  std::uint64_t max_bits_ = 0;
  std::uint64_t messages_ = 0;
  std::string phase_;
  std::uint64_t phase_start_ = 0;
  std::map<std::string, std::uint64_t> per_phase_;
};

}  // namespace ftspanner

#endif  // FTSPANNER_ENGINE_H_
