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

#include "evcoref/baseline.h"

#include <map>

#include "evcoref/error.h"
#include "evcoref/text_util.h"

namespace evcoref {

Partition LemmaBaseline(const Corpus& corpus, Scope scope) {
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<std::string>>
      classes;
  for (const auto& e : corpus.mentions()) {
    if (TrimView(e.lemma).empty()) {
      throw Error(ErrorCode::kMissingLemma, "mention '" + e.id + "' has no lemma");
    }
    std::string topic = scope == Scope::kCrossTopic ? std::string() : e.topic_id;
    std::string doc = scope == Scope::kWithinDocument ? e.doc_id : std::string();
    classes[{std::move(topic), std::move(doc), e.lemma}].push_back(e.id);
  }
  std::vector<std::vector<std::string>> blocks;
  blocks.reserve(classes.size());
  for (auto& [_, ids] : classes) blocks.push_back(std::move(ids));
  return Partition(std::move(blocks));
}

Lexicon ParseLexicon(std::string_view text) {
  Lexicon lexicon;
  for (const auto& line : SplitLines(text)) {
    std::string_view lemma = TrimView(StripComment(line.text));
    if (!lemma.empty()) lexicon.emplace(lemma);
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::string& path) { return ParseLexicon(ReadFile(path)); }

Corpus LemmaFilter(const Corpus& corpus, const Lexicon& lexicon) {
  std::vector<EventDescription> kept;
  std::vector<std::string> kept_ids;
  for (const auto& e : corpus.mentions()) {
    if (lexicon.count(e.lemma)) {
      kept.push_back(e);
      kept_ids.push_back(e.id);
    }
  }
  TopicPartitions gold;
  for (const auto& [topic, partition] : corpus.gold()) {
    Partition restricted = partition.Restrict(kept_ids);
    if (!restricted.empty()) gold.emplace(topic, std::move(restricted));
  }
  return Corpus(std::move(kept), std::move(gold));
}

}  // namespace evcoref
