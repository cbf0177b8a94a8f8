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

#include "evcoref/corpus.h"
#include "support/expect_error.h"
#include "support/oracles.h"

namespace evcoref {
namespace {

using testing::DataPath;

constexpr const char* kMention =
    R"({"record":"mention","id":"m1","type":"Killing","lemma":"kill","doc":"d","topic":"t"})";

TEST(CorpusTest, LennonFixture) {
  const Corpus c = LoadCorpus(DataPath("fixtures/lennon.jsonl"));
  EXPECT_EQ(c.mentions().size(), 5u);
  ASSERT_EQ(c.topics().size(), 1u);
  EXPECT_EQ(c.topics()[0].documents.size(), 2u);
  ASSERT_EQ(c.gold().size(), 1u);
  EXPECT_EQ(c.gold().at("lennon").blocks().size(), 2u);
  const CorpusStats s = ComputeStats(c);
  EXPECT_EQ(s.topics, 1u);
  EXPECT_EQ(s.documents, 2u);
  EXPECT_EQ(s.mentions, 5u);
  EXPECT_EQ(s.distinct_lemmas, 4u);
  EXPECT_EQ(s.per_type.at("Killing"), 2u);
}

TEST(CorpusTest, EmptyCorpus) {
  const Corpus c = ParseCorpus("");
  EXPECT_TRUE(c.mentions().empty());
  EXPECT_EQ(ComputeStats(c), CorpusStats{});
}

TEST(CorpusTest, EntityPrefixIsNormalized) {
  const Corpus c = LoadCorpus(DataPath("fixtures/lennon.jsonl"));
  EXPECT_EQ(c.Find("k2")->Fillers("Victim")[0].id(), "dbpedia:John_Lennon");
}

TEST(CorpusTest, GoldWithUnknownMention) {
  const std::string text = std::string(kMention) +
                           "\n{\"record\":\"gold\",\"topic\":\"t\",\"clusters\":[[\"m1\",\"zz\"]]}\n";
  EXPECT_ERROR_CODE(ParseCorpus(text), ErrorCode::kGoldUniverseMismatch);
}

TEST(CorpusTest, GoldMissingAMention) {
  const std::string text = std::string(kMention) + "\n" +
                           R"({"record":"mention","id":"m2","type":"Killing","lemma":"kill","doc":"d","topic":"t"})" +
                           "\n{\"record\":\"gold\",\"topic\":\"t\",\"clusters\":[[\"m1\"]]}\n";
  EXPECT_ERROR_CODE(ParseCorpus(text), ErrorCode::kGoldUniverseMismatch);
}

TEST(CorpusTest, DuplicateMentionId) {
  EXPECT_ERROR_CODE(ParseCorpus(std::string(kMention) + "\n" + kMention),
                    ErrorCode::kDuplicateMentionId);
}

TEST(CorpusTest, SchemaErrorsNameLineAndField) {
  const std::pair<std::string, std::string> cases[] = {
      {R"({"record":"mention","id":"m1","type":"Killing","lemma":"kill","doc":"d"})", "topic"},
      {R"({"record":"mention","id":"m1","type":"Killing","lemma":"kill","doc":"d","topic":"t","colour":"red"})",
       "colour"},
      {R"({"record":"mention","id":"m1","type":"Killing","lemma":"kill","doc":"d","topic":"t","time":"1980-13"})",
       "time"},
      {R"({"record":"mention","id":"m1","type":"Killing","lemma":"kill","doc":"d","topic":"t","participants":[{"role":"Victim"}]})",
       "participants[0].entity"},
      {R"({"record":"mention","id":"","type":"Killing","lemma":"kill","doc":"d","topic":"t"})", "id"},
      {R"({"record":"other"})", "record"},
      {R"(not json)", ""},
  };
  for (const auto& [line, field] : cases) {
    try {
      ParseCorpus("# header\n" + line + "\n", "c.jsonl");
      ADD_FAILURE() << "accepted: " << line;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSchemaError) << e.what();
      const std::string what = e.what();
      EXPECT_NE(what.find("c.jsonl:2"), std::string::npos) << what;
      EXPECT_NE(what.find(field), std::string::npos) << what;
    }
  }
}

TEST(CorpusTest, BrokenFixtureIsRejected) {
  EXPECT_ERROR_CODE(LoadCorpus(DataPath("fixtures/broken.jsonl")), ErrorCode::kSchemaError);
}

TEST(CorpusTest, FormatRoundTrips) {
  const ProfileStore profiles = testing::ShippedProfiles();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::RandomCorpus(rng, profiles);
    const Corpus again = ParseCorpus(FormatCorpus(c));
    EXPECT_EQ(again, c);
    EXPECT_EQ(FormatCorpus(again), FormatCorpus(c));
  }
  for (const char* f : {"fixtures/lennon.jsonl", "fixtures/subevent.jsonl"}) {
    const Corpus c = LoadCorpus(DataPath(f));
    EXPECT_EQ(ParseCorpus(FormatCorpus(c)), c);
  }
}

TEST(GazetteerTest, FillsMissingAncestry) {
  const Gazetteer gaz = LoadGazetteer(DataPath("fixtures/gazetteer.txt"));
  ASSERT_EQ(gaz.count("dbpedia:Manhattan"), 1u);
  EventDescription e;
  e.id = "m";
  e.event_type = "Killing";
  e.lemma = "kill";
  e.doc_id = "d";
  e.topic_id = "t";
  e.place = PlaceSpec(EntityRef("dbpedia:Manhattan"));
  const Corpus c = ApplyGazetteer(Corpus({e}), gaz);
  ASSERT_FALSE(c.mentions()[0].place->ancestry.empty());
  EXPECT_EQ(c.mentions()[0].place->ancestry[0].id(), "dbpedia:New_York_City");
}

TEST(GazetteerTest, RejectsDuplicates) {
  EXPECT_THROW(ParseGazetteer("a b\na c\n"), Error);
}

TEST(ValidateTest, ReportsTypesRolesAndSubevents) {
  const ProfileStore profiles = testing::ShippedProfiles();
  EventDescription a;
  a.id = "a";
  a.event_type = "Killing";
  a.lemma = "kill";
  a.doc_id = "d";
  a.topic_id = "t";
  a.participants = {{"Protagonist", EntityRef("x")}};
  a.subevents = {"missing"};
  EventDescription b = a;
  b.id = "b";
  b.event_type = "Eating";
  b.participants.clear();
  b.subevents.clear();
  const auto issues = ValidateCorpus(Corpus({a, b}), profiles);
  ASSERT_EQ(issues.size(), 3u);
  int fatal = 0;
  for (const auto& i : issues) fatal += i.fatal ? 1 : 0;
  EXPECT_EQ(fatal, 2);
}

}  // namespace
}  // namespace evcoref
