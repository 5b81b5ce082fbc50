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

#include <gtest/gtest.h>

#include "ftspanner/errors.h"

namespace ftspanner {
namespace {

TEST(BitsForTest, Values) {
  EXPECT_EQ(BitsFor(0), 1u);
  EXPECT_EQ(BitsFor(1), 1u);
  EXPECT_EQ(BitsFor(2), 1u);
  EXPECT_EQ(BitsFor(3), 2u);
  EXPECT_EQ(BitsFor(256), 8u);
  EXPECT_EQ(BitsFor(257), 9u);
}

TEST(MessageBuilderTest, ChargesDeclaredWidths) {
  const Message m = MessageBuilder().Tag(5, 3).Field(1, 1).Record(9, 4).Record(0, 4).Build();
  EXPECT_EQ(m.bits, 12u);
  EXPECT_EQ(m.tag, 5u);
  EXPECT_EQ(m.num_fields, 1u);
  EXPECT_EQ(m.records, (std::vector<std::uint64_t>{9, 0}));
  EXPECT_THROW(MessageBuilder().Field(4, 2), SimulationError);
  EXPECT_THROW(MessageBuilder().Tag(8, 3), SimulationError);
  MessageBuilder full;
  for (int i = 0; i < 4; ++i) full.Field(0, 1);
  EXPECT_THROW(full.Field(0, 1), SimulationError);
}

TEST(RoundEngineTest, DeliversSortedAndCountsRounds) {
  const Graph g(3, {{0, 1}, {1, 2}});
  RoundEngine engine(g, Model::kCongest, 8, 100);
  engine.BeginPhase("a");
  engine.Send(2, 1, MessageBuilder().Tag(1, 2).Build());
  engine.Send(0, 0, MessageBuilder().Tag(3, 2).Build());
  engine.Send(0, 0, MessageBuilder().Tag(0, 2).Build());
  EXPECT_EQ(engine.pending(), 3u);
  engine.Deliver();
  const auto in = engine.inbox(1);
  ASSERT_EQ(in.size(), 3u);
  EXPECT_EQ(in[0].from, 0u);
  EXPECT_EQ(in[0].msg.tag, 0u);
  EXPECT_EQ(in[1].msg.tag, 3u);
  EXPECT_EQ(in[2].from, 2u);
  engine.Deliver();  // quiet round
  engine.Deliver();
  engine.EndPhase();
  const SimTrace t = engine.trace();
  EXPECT_EQ(t.rounds_used, 1u);
  EXPECT_EQ(t.messages_total, 3u);
  EXPECT_EQ(t.max_bits_on_edge_per_round, 4u);
  EXPECT_EQ(t.per_phase_rounds.at("a"), 1u);
}

TEST(RoundEngineTest, EnforcesCongestBudgetPerDirection) {
  const Graph g(2, {{0, 1}});
  RoundEngine engine(g, Model::kCongest, 8, 100);
  engine.Send(0, 0, MessageBuilder().Field(0, 5).Build());
  engine.Send(1, 0, MessageBuilder().Field(0, 8).Build());  // other direction
  EXPECT_THROW(engine.Send(0, 0, MessageBuilder().Field(0, 4).Build()), SimulationError);
  engine.Deliver();
  // The budget resets every round.
  EXPECT_NO_THROW(engine.Send(0, 0, MessageBuilder().Field(0, 8).Build()));
}

TEST(RoundEngineTest, LocalModelIgnoresWordBudget) {
  const Graph g(2, {{0, 1}});
  RoundEngine engine(g, Model::kLocal, 8, 100);
  MessageBuilder b;
  for (int i = 0; i < 100; ++i) b.Record(7, 3);
  EXPECT_NO_THROW(engine.Send(0, 0, b.Build()));
}

TEST(RoundEngineTest, RejectsNonIncidentSendsAndRoundOverflow) {
  const Graph g(3, {{0, 1}, {1, 2}});
  RoundEngine engine(g, Model::kLocal, 8, 2);
  EXPECT_THROW(engine.Send(0, 1, Message()), SimulationError);
  EXPECT_THROW(engine.Send(0, 5, Message()), SimulationError);
  engine.Deliver();
  engine.Deliver();
  EXPECT_THROW(engine.Deliver(), SimulationError);
}

TEST(RoundEngineTest, IdleRequiresEmptyOutbox) {
  const Graph g(2, {{0, 1}});
  RoundEngine engine(g, Model::kCongest, 8, 100);
  engine.Idle(3);
  EXPECT_EQ(engine.clock(), 3u);
  engine.Send(0, 0, MessageBuilder().Field(1, 1).Build());
  EXPECT_THROW(engine.Idle(1), SimulationError);
  engine.Deliver();
  EXPECT_EQ(engine.trace().rounds_used, 4u);
}

TEST(ModelTest, Names) {
  EXPECT_EQ(ParseModel("local"), Model::kLocal);
  EXPECT_EQ(ParseModel("congest"), Model::kCongest);
  EXPECT_EQ(ToString(Model::kCongest), "congest");
  EXPECT_THROW(ParseModel("async"), InvalidArgument);
}

}  // namespace
}  // namespace ftspanner
