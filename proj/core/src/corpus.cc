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

#include "evcoref/corpus.h"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "evcoref/error.h"
#include "evcoref/ontology.h"
#include "evcoref/text_util.h"

namespace evcoref {

using json = nlohmann::ordered_json;

Corpus::Corpus(std::vector<EventDescription> mentions, TopicPartitions gold)
    : mentions_(std::move(mentions)), gold_(std::move(gold)) {
  std::map<std::string, size_t> topic_pos;
  std::map<std::pair<std::string, std::string>, size_t> doc_pos;
  for (size_t i = 0; i < mentions_.size(); ++i) {
    const EventDescription& e = mentions_[i];
    auto require = [&](const std::string& value, const char* field) {
      if (value.empty()) {
        throw Error(ErrorCode::kSchemaError,
                    "mention '" + e.id + "': missing " + field);
      }
    };
    if (e.id.empty()) throw Error(ErrorCode::kSchemaError, "mention without id");
    require(e.event_type, "type");
    require(e.lemma, "lemma");
    require(e.doc_id, "doc");
    require(e.topic_id, "topic");
    if (!index_.emplace(e.id, i).second) {
      throw Error(ErrorCode::kDuplicateMentionId,
                  "mention id '" + e.id + "' occurs more than once");
    }
    auto [tp, new_topic] = topic_pos.emplace(e.topic_id, topics_.size());
    if (new_topic) topics_.push_back(Topic{e.topic_id, {}});
    Topic& topic = topics_[tp->second];
    auto [dp, new_doc] = doc_pos.emplace(std::pair{e.topic_id, e.doc_id},
                                         topic.documents.size());
    if (new_doc) topic.documents.push_back(Document{e.doc_id, {}});
    topic.documents[dp->second].mention_indices.push_back(i);
  }

  for (const auto& [topic_id, partition] : gold_) {
    if (!topic_pos.count(topic_id)) {
      throw Error(ErrorCode::kGoldUniverseMismatch,
                  "gold for unknown topic '" + topic_id + "'");
    }
    for (const auto& id : partition.universe()) {
      const EventDescription* e = Find(id);
      if (e == nullptr) {
        throw Error(ErrorCode::kGoldUniverseMismatch,
                    "gold for topic '" + topic_id +
                        "' references unknown mention '" + id + "'");
      }
      if (e->topic_id != topic_id) {
        throw Error(ErrorCode::kGoldUniverseMismatch,
                    "gold for topic '" + topic_id + "' contains mention '" +
                        id + "' of topic '" + e->topic_id + "'");
      }
    }
    if (partition.universe() != TopicMentionIds(topic_id)) {
      throw Error(ErrorCode::kGoldUniverseMismatch,
                  "gold for topic '" + topic_id +
                      "' does not cover every mention of the topic");
    }
  }
}

const EventDescription* Corpus::Find(std::string_view id) const {
  auto i = IndexOf(id);
  return i ? &mentions_[*i] : nullptr;
}

std::optional<size_t> Corpus::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Corpus::TopicMentionIds(std::string_view topic_id) const {
  std::vector<std::string> ids;
  for (const auto& e : mentions_) {
    if (e.topic_id == topic_id) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

class RecordReader {
 public:
  RecordReader(std::string_view source, int line) : source_(source), line_(line) {}

  [[noreturn]] void Fail(const std::string& path, const std::string& what) const {
    throw Error(ErrorCode::kSchemaError, std::string(source_) + ":" +
                                             std::to_string(line_) + ": " +
                                             path + ": " + what);
  }

  std::string String(const json& obj, const std::string& key,
                     const std::string& path, bool required) const {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) Fail(path + key, "required field missing");
      return {};
    }
    if (!it->is_string()) Fail(path + key, "expected string");
    std::string value = it->get<std::string>();
    if (required && TrimView(value).empty()) Fail(path + key, "must not be empty");
    return value;
  }

  EntityRef Entity(const json& value, const std::string& path,
                   std::string surface = {}) const {
    if (!value.is_string()) Fail(path, "expected string");
    try {
      return NormalizeEntity(value.get<std::string>(), std::move(surface));
    } catch (const Error& e) {
      Fail(path, e.what());
    }
  }

  void CheckKeys(const json& obj, std::initializer_list<std::string_view> allowed,
                 const std::string& path) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        Fail(path + it.key(), "unknown field");
      }
    }
  }

  EventDescription Mention(const json& rec) const {
    CheckKeys(rec, {"record", "id", "type", "lemma", "doc", "topic",
                    "participants", "time", "place", "subevents"},
              "");
    EventDescription e;
    e.id = String(rec, "id", "", true);
    e.event_type = String(rec, "type", "", true);
    e.lemma = String(rec, "lemma", "", true);
    e.doc_id = String(rec, "doc", "", true);
    e.topic_id = String(rec, "topic", "", true);

    if (auto it = rec.find("participants"); it != rec.end()) {
      if (!it->is_array()) Fail("participants", "expected array");
      for (size_t i = 0; i < it->size(); ++i) {
        const json& p = (*it)[i];
        const std::string path = "participants[" + std::to_string(i) + "].";
        if (!p.is_object()) Fail(path.substr(0, path.size() - 1), "expected object");
        CheckKeys(p, {"role", "entity", "surface"}, path);
        std::string role = String(p, "role", path, true);
        std::string surface = String(p, "surface", path, false);
        auto ent = p.find("entity");
        if (ent == p.end()) Fail(path + "entity", "required field missing");
        e.participants.push_back(
            Participant{std::move(role), Entity(*ent, path + "entity", surface)});
      }
    }
    if (auto it = rec.find("time"); it != rec.end()) {
      if (!it->is_string()) Fail("time", "expected string");
      try {
        e.time = ParseTimeSpec(it->get<std::string>());
      } catch (const Error& err) {
        Fail("time", err.what());
      }
    }
    if (auto it = rec.find("place"); it != rec.end()) {
      if (it->is_string()) {
        e.place = PlaceSpec(Entity(*it, "place"));
      } else if (it->is_object()) {
        CheckKeys(*it, {"id", "ancestry"}, "place.");
        auto id = it->find("id");
        if (id == it->end()) Fail("place.id", "required field missing");
        EntityRef place_id = Entity(*id, "place.id");
        std::vector<EntityRef> ancestry;
        if (auto anc = it->find("ancestry"); anc != it->end()) {
          if (!anc->is_array()) Fail("place.ancestry", "expected array");
          for (size_t i = 0; i < anc->size(); ++i) {
            ancestry.push_back(
                Entity((*anc)[i], "place.ancestry[" + std::to_string(i) + "]"));
          }
        }
        try {
          e.place = PlaceSpec(std::move(place_id), std::move(ancestry));
        } catch (const Error& err) {
          Fail("place", err.what());
        }
      } else {
        Fail("place", "expected string or object");
      }
    }
    if (auto it = rec.find("subevents"); it != rec.end()) {
      if (!it->is_array()) Fail("subevents", "expected array");
      for (size_t i = 0; i < it->size(); ++i) {
        const json& s = (*it)[i];
        const std::string path = "subevents[" + std::to_string(i) + "]";
        if (!s.is_string() || s.get<std::string>().empty()) {
          Fail(path, "expected non-empty string");
        }
        e.subevents.push_back(s.get<std::string>());
      }
    }
    return e;
  }

  std::pair<std::string, Partition> Gold(const json& rec) const {
    CheckKeys(rec, {"record", "topic", "clusters"}, "");
    std::string topic = String(rec, "topic", "", true);
    auto it = rec.find("clusters");
    if (it == rec.end()) Fail("clusters", "required field missing");
    if (!it->is_array()) Fail("clusters", "expected array");
    std::vector<std::vector<std::string>> blocks;
    for (size_t i = 0; i < it->size(); ++i) {
      const json& block = (*it)[i];
      const std::string path = "clusters[" + std::to_string(i) + "]";
      if (!block.is_array() || block.empty()) Fail(path, "expected non-empty array");
      std::vector<std::string> ids;
      for (size_t j = 0; j < block.size(); ++j) {
        if (!block[j].is_string()) {
          Fail(path + "[" + std::to_string(j) + "]", "expected string");
        }
        ids.push_back(block[j].get<std::string>());
      }
      blocks.push_back(std::move(ids));
    }
    try {
      return {topic, Partition(std::move(blocks))};
    } catch (const Error& err) {
      Fail("clusters", err.what());
    }
  }

 private:
  std::string_view source_;
  int line_;
};

json PlaceJson(const PlaceSpec& place) {
  if (place.ancestry.empty()) return place.id.id();
  json obj;
  obj["id"] = place.id.id();
  json anc = json::array();
  for (const auto& a : place.ancestry) anc.push_back(a.id());
  obj["ancestry"] = anc;
  return obj;
}

}  // namespace

Corpus ParseCorpus(std::string_view text, std::string_view source) {
  std::vector<EventDescription> mentions;
  TopicPartitions gold;
  std::map<std::string, int> mention_line;
  for (const auto& line : SplitLines(text)) {
    std::string_view body = TrimView(line.text);
    if (body.empty() || body.front() == '#') continue;
    RecordReader reader(source, line.number);
    json rec;
    try {
      rec = json::parse(body);
    } catch (const json::parse_error& e) {
      reader.Fail("(record)", std::string("malformed JSON: ") + e.what());
    }
    if (!rec.is_object()) reader.Fail("(record)", "expected a JSON object");
    std::string kind = reader.String(rec, "record", "", true);
    if (kind == "mention") {
      EventDescription e = reader.Mention(rec);
      auto [it, inserted] = mention_line.emplace(e.id, line.number);
      if (!inserted) {
        throw Error(ErrorCode::kDuplicateMentionId,
                    std::string(source) + ":" + std::to_string(line.number) +
                        ": id: mention '" + e.id + "' already defined on line " +
                        std::to_string(it->second));
      }
      mentions.push_back(std::move(e));
    } else if (kind == "gold") {
      auto [topic, partition] = reader.Gold(rec);
      if (!gold.emplace(topic, std::move(partition)).second) {
        reader.Fail("topic", "gold for topic '" + topic + "' given twice");
      }
    } else {
      reader.Fail("record", "expected 'mention' or 'gold', got '" + kind + "'");
    }
  }
  try {
    return Corpus(std::move(mentions), std::move(gold));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source) + ": " + e.what());
  }
}

Corpus LoadCorpus(const std::string& path) { return ParseCorpus(ReadFile(path), path); }

std::string FormatCorpus(const Corpus& corpus) {
  std::string out;
  for (const EventDescription& e : corpus.mentions()) {
    json rec;
    rec["record"] = "mention";
    rec["id"] = e.id;
    rec["type"] = e.event_type;
    rec["lemma"] = e.lemma;
    rec["doc"] = e.doc_id;
    rec["topic"] = e.topic_id;
    if (!e.participants.empty()) {
      json parts = json::array();
      for (const auto& p : e.participants) {
        json obj;
        obj["role"] = p.role;
        obj["entity"] = p.entity.id();
        if (!p.entity.surface().empty()) obj["surface"] = p.entity.surface();
        parts.push_back(std::move(obj));
      }
      rec["participants"] = std::move(parts);
    }
    if (e.time) rec["time"] = e.time->ToString();
    if (e.place) rec["place"] = PlaceJson(*e.place);
    if (!e.subevents.empty()) rec["subevents"] = e.subevents;
    out += rec.dump();
    out += '\n';
  }
  for (const auto& [topic, partition] : corpus.gold()) {
    json rec;
    rec["record"] = "gold";
    rec["topic"] = topic;
    rec["clusters"] = partition.blocks();
    out += rec.dump();
    out += '\n';
  }
  return out;
}

Gazetteer ParseGazetteer(std::string_view text, std::string_view source) {
  Gazetteer gazetteer;
  for (const auto& line : SplitLines(text)) {
    auto words = SplitWords(TrimView(StripComment(line.text)));
    if (words.empty()) continue;
    try {
      EntityRef id = NormalizeEntity(words[0]);
      std::vector<EntityRef> chain;
      for (size_t i = 1; i < words.size(); ++i) chain.push_back(NormalizeEntity(words[i]));
      PlaceSpec check(id, chain);  // validates duplicates and self-containment
      if (!gazetteer.emplace(id.id(), std::move(chain)).second) {
        throw Error(ErrorCode::kSchemaError, "location '" + id.id() + "' listed twice");
      }
    } catch (const Error& e) {
      throw ParseError(std::string(source), line.number, 1, e.what());
    }
  }
  return gazetteer;
}

Gazetteer LoadGazetteer(const std::string& path) {
  return ParseGazetteer(ReadFile(path), path);
}

Corpus ApplyGazetteer(const Corpus& corpus, const Gazetteer& gazetteer) {
  std::vector<EventDescription> mentions = corpus.mentions();
  for (auto& e : mentions) {
    if (!e.place || !e.place->ancestry.empty()) continue;
    auto it = gazetteer.find(e.place->id.id());
    if (it != gazetteer.end()) e.place = PlaceSpec(e.place->id, it->second);
  }
  return Corpus(std::move(mentions), corpus.gold());
}

std::vector<ValidationIssue> ValidateCorpus(const Corpus& corpus,
                                            const ProfileStore& store) {
  std::vector<ValidationIssue> issues;
  for (const EventDescription& e : corpus.mentions()) {
    const EventTypeProfile* profile = store.Find(e.event_type);
    if (profile == nullptr) {
      issues.push_back({e.id, "type",
                        "event type '" + e.event_type + "' has no profile", true});
    } else {
      for (size_t i = 0; i < e.participants.size(); ++i) {
        const auto& role = e.participants[i].role;
        if (!profile->HasRole(role)) {
          issues.push_back({e.id, "participants[" + std::to_string(i) + "].role",
                            "'" + role + "' is not a role of " + e.event_type,
                            true});
        }
      }
    }
    for (size_t i = 0; i < e.subevents.size(); ++i) {
      const std::string& sub = e.subevents[i];
      const std::string field = "subevents[" + std::to_string(i) + "]";
      if (sub == e.id) {
        issues.push_back({e.id, field, "an event cannot be its own subevent", true});
      } else if (corpus.Find(sub) == nullptr) {
        issues.push_back({e.id, field, "subevent '" + sub + "' is not in the corpus",
                          false});
      }
    }
  }
  return issues;
}

CorpusStats ComputeStats(const Corpus& corpus) {
  CorpusStats stats;
  stats.topics = corpus.topics().size();
  for (const auto& t : corpus.topics()) stats.documents += t.documents.size();
  stats.mentions = corpus.mentions().size();
  std::set<std::string> lemmas;
  for (const auto& e : corpus.mentions()) {
    lemmas.insert(e.lemma);
    ++stats.per_type[e.event_type];
  }
  stats.distinct_lemmas = lemmas.size();
  stats.gold_topics = corpus.gold().size();
  for (const auto& [_, p] : corpus.gold()) stats.gold_clusters += p.blocks().size();
  return stats;
}

}  // namespace evcoref
