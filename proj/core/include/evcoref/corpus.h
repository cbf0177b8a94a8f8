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

#ifndef EVCOREF_CORPUS_H_
#define EVCOREF_CORPUS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evcoref/model.h"
#include "evcoref/partition.h"

namespace evcoref {

class ProfileStore;

struct Document {
  std::string doc_id;
  std::vector<size_t> mention_indices;  // into Corpus::mentions()
};

struct Topic {
  std::string topic_id;
  std::vector<Document> documents;
};

// A validated collection of event descriptions grouped by topic and document,
// with optional gold partitions per topic. Topics and documents keep the
// order in which they first appear.
class Corpus {
 public:
  Corpus() = default;

  // Throws Error(kDuplicateMentionId), Error(kSchemaError) for records
  // without type/lemma/doc/topic, and Error(kGoldUniverseMismatch) when a
  // gold partition does not cover exactly its topic's mentions.
  Corpus(std::vector<EventDescription> mentions, TopicPartitions gold = {});

  const std::vector<EventDescription>& mentions() const { return mentions_; }
  const std::vector<Topic>& topics() const { return topics_; }
  const TopicPartitions& gold() const { return gold_; }

  const EventDescription* Find(std::string_view id) const;
  std::optional<size_t> IndexOf(std::string_view id) const;

  // Sorted mention ids of one topic.
  std::vector<std::string> TopicMentionIds(std::string_view topic_id) const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.mentions_ == b.mentions_ && a.gold_ == b.gold_;
  }

 private:
  std::vector<EventDescription> mentions_;
  std::vector<Topic> topics_;
  TopicPartitions gold_;
  std::unordered_map<std::string, size_t> index_;
};

// JSON Lines corpus format; see docs/formats.md. Errors carry
// "<source>:<line>: <field path>".
Corpus ParseCorpus(std::string_view text, std::string_view source = "<corpus>");
Corpus LoadCorpus(const std::string& path);

// Mentions in corpus order, then gold records sorted by topic.
std::string FormatCorpus(const Corpus& corpus);

// Location id -> containing locations, most specific first.
using Gazetteer = std::map<std::string, std::vector<EntityRef>, std::less<>>;

Gazetteer ParseGazetteer(std::string_view text,
                         std::string_view source = "<gazetteer>");
Gazetteer LoadGazetteer(const std::string& path);

// Fills the ancestry of every place that has none from the gazetteer.
Corpus ApplyGazetteer(const Corpus& corpus, const Gazetteer& gazetteer);

struct ValidationIssue {
  std::string mention_id;
  std::string field;
  std::string message;
  // Unresolvable subevents are reported but do not make the corpus invalid.
  bool fatal = true;
};

// Checks event types and roles against the profiles and subevent references
// against the corpus.
std::vector<ValidationIssue> ValidateCorpus(const Corpus& corpus,
                                            const ProfileStore& store);

struct CorpusStats {
  size_t topics = 0;
  size_t documents = 0;
  size_t mentions = 0;
  size_t distinct_lemmas = 0;
  size_t gold_topics = 0;
  size_t gold_clusters = 0;
  std::map<std::string, size_t> per_type;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats ComputeStats(const Corpus& corpus);

}  // namespace evcoref

#endif  // EVCOREF_CORPUS_H_
