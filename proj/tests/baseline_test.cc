// Copyright 2026 The evcoref Authors.
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

#include <random>

#include <gtest/gtest.h>

#include "evcoref/baseline.h"
#include "evcoref/corpus.h"
#include "support/expect_error.h"
#include "support/oracles.h"

namespace evcoref {
namespace {

using Blocks = std::vector<std::vector<std::string>>;

EventDescription M(std::string id, std::string lemma, std::string doc = "d",
                   std::string topic = "t") {
  EventDescription e;
  e.id = std::move(id);
  e.event_type = "Killing";
  e.lemma = std::move(lemma);
  e.doc_id = std::move(doc);
  e.topic_id = std::move(topic);
  return e;
}

TEST(LemmaBaselineTest, GroupsExactLemmas) {
  const Corpus c({M("m1", "kill"), M("m2", "kill"), M("m3", "die")});
  EXPECT_EQ(LemmaBaseline(c), Partition(Blocks{{"m1", "m2"}, {"m3"}}));
}

TEST(LemmaBaselineTest, SingleMention) {
  EXPECT_EQ(LemmaBaseline(Corpus({M("m1", "kill")})), Partition(Blocks{{"m1"}}));
}

TEST(LemmaBaselineTest, CaseSensitive) {
  const Corpus c({M("m1", "shoot"), M("m2", "Shoot")});
  EXPECT_EQ(LemmaBaseline(c), Partition(Blocks{{"m1"}, {"m2"}}));
}

TEST(LemmaBaselineTest, ScopeSeparatesTopicsAndDocs) {
  const Corpus c({M("a", "kill", "d1", "t1"), M("b", "kill", "d2", "t1"),
                  M("c", "kill", "d3", "t2")});
  EXPECT_EQ(LemmaBaseline(c, Scope::kWithinTopic), Partition(Blocks{{"a", "b"}, {"c"}}));
  EXPECT_EQ(LemmaBaseline(c, Scope::kWithinDocument), Partition(Blocks{{"a"}, {"b"}, {"c"}}));
  EXPECT_EQ(LemmaBaseline(c, Scope::kCrossTopic), Partition(Blocks{{"a", "b", "c"}}));
}

TEST(LemmaBaselineTest, MatchesGroupingOracle) {
  const ProfileStore profiles = testing::ShippedProfiles();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::RandomCorpus(rng, profiles, {30, 0, 0});
    for (Scope s : {Scope::kWithinDocument, Scope::kWithinTopic, Scope::kCrossTopic}) {
      EXPECT_EQ(LemmaBaseline(c, s), testing::LemmaGroupingOracle(c, s));
    }
  }
}

TEST(LexiconTest, ParseSkipsCommentsAndBlanks) {
  const Lexicon lex = ParseLexicon("# frames\nkill\n\n  die  \n");
  EXPECT_EQ(lex, (Lexicon{"die", "kill"}));
}

TEST(LemmaFilterTest, KeepsListedLemmas) {
  const Corpus c({M("m1", "kill"), M("m2", "eat")});
  const Corpus f = LemmaFilter(c, Lexicon{"kill", "die"});
  ASSERT_EQ(f.mentions().size(), 1u);
  EXPECT_EQ(f.mentions()[0].id, "m1");
}

TEST(LemmaFilterTest, EmptyLexiconEmptiesCorpus) {
  const Corpus c({M("m1", "kill")}, {{"t", Partition(Blocks{{"m1"}})}});
  const Corpus f = LemmaFilter(c, Lexicon{});
  EXPECT_TRUE(f.mentions().empty());
  EXPECT_TRUE(f.gold().empty());
}

TEST(LemmaFilterTest, RestrictsGold) {
  const Corpus c({M("m1", "kill"), M("m2", "eat"), M("m3", "kill")},
                 {{"t", Partition(Blocks{{"m1", "m2"}, {"m3"}})}});
  const Corpus f = LemmaFilter(c, Lexicon{"kill"});
  EXPECT_EQ(f.gold().at("t"), Partition(Blocks{{"m1"}, {"m3"}}));
}

TEST(LemmaFilterTest, Idempotent) {
  const ProfileStore profiles = testing::ShippedProfiles();
  std::mt19937_64 rng(19);
  const std::vector<std::string> words = {"kill", "slay", "die", "shoot", "Shoot", "arrest"};
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::RandomCorpus(rng, profiles, {20, 0, 0});
    Lexicon lex;
    for (const auto& w : words) {
      if (rng() % 2) lex.insert(w);
    }
    const Corpus once = LemmaFilter(c, lex);
    EXPECT_EQ(LemmaFilter(once, lex), once);
  }
}

TEST(LemmaBaselineTest, MentionsWithoutLemmaAreRejectedOnLoad) {
  EXPECT_ERROR_CODE(Corpus({M("m1", "")}), ErrorCode::kSchemaError);
}

}  // namespace
}  // namespace evcoref
