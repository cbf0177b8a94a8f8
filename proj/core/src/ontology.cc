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

#include "evcoref/ontology.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include "evcoref/corpus.h"
#include "evcoref/error.h"
#include "evcoref/partition.h"
#include "evcoref/text_util.h"

namespace evcoref {

std::string_view ClassificationName(Classification c) {
  return c == Classification::kAccomplishment ? "accomplishment" : "achievement";
}

std::string_view TemporalRegionName(TemporalRegion t) {
  return t == TemporalRegion::kAtomic ? "atomic" : "interval";
}

std::string_view ModalityName(Modality m) {
  switch (m) {
    case Modality::kPossible: return "possible";
    case Modality::kNecessary: return "necessary";
    case Modality::kUnspecified: return "";
  }
  return "";
}

std::string_view RoleClassName(RoleClass r) {
  switch (r) {
    case RoleClass::kActive: return "active";
    case RoleClass::kPassive: return "passive";
    case RoleClass::kTool: return "tool";
  }
  return "";
}

std::string_view RepeatAnchorName(RepeatAnchor a) {
  switch (a) {
    case RepeatAnchor::kActive: return "active";
    case RepeatAnchor::kPassive: return "passive";
    case RepeatAnchor::kSpatiotemporal: return "spatiotemporal";
  }
  return "";
}

std::string_view MultiplicityName(Multiplicity m) {
  return m == Multiplicity::kAtMostOne ? "at-most-one" : "many";
}

bool EventTypeProfile::HasRole(std::string_view role) const {
  return ClassOf(role).has_value();
}

std::optional<RoleClass> EventTypeProfile::ClassOf(std::string_view role) const {
  for (RoleClass c : {RoleClass::kActive, RoleClass::kPassive, RoleClass::kTool}) {
    for (const auto& r : Roles(c)) {
      if (r.name == role) return c;
    }
  }
  return std::nullopt;
}

const std::vector<RoleSpec>& EventTypeProfile::Roles(RoleClass c) const {
  switch (c) {
    case RoleClass::kActive: return active_roles;
    case RoleClass::kPassive: return passive_roles;
    case RoleClass::kTool: return tool_roles;
  }
  return tool_roles;
}

std::optional<Multiplicity> EventTypeProfile::RepeatabilityOf(
    RepeatAnchor anchor) const {
  for (const auto& r : repeatability) {
    if (r.anchor == anchor) return r.multiplicity;
  }
  return std::nullopt;
}

void ProfileStore::Add(EventTypeProfile profile) {
  std::string name = profile.type_name;
  auto [it, inserted] = profiles_.emplace(name, std::move(profile));
  if (!inserted) {
    throw Error(ErrorCode::kDuplicateProfile,
                "profile '" + name + "' is declared more than once");
  }
}

const EventTypeProfile* ProfileStore::Find(std::string_view type_name) const {
  auto it = profiles_.find(type_name);
  return it == profiles_.end() ? nullptr : &it->second;
}

std::vector<std::string> ProfileStore::TypeNames() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : profiles_) names.push_back(name);
  return names;
}

namespace {

class ProfileParser {
 public:
  ProfileParser(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  ProfileStore Parse() {
    ProfileStore store;
    std::optional<EventTypeProfile> current;
    int open_line = 0;
    for (const auto& line : SplitLines(text_)) {
      line_ = line.number;
      std::string_view body = StripComment(line.text);
      std::string_view trimmed = TrimView(body);
      if (trimmed.empty()) continue;
      column_ = static_cast<int>(trimmed.data() - line.text.data()) + 1;

      if (StartsWithWord(trimmed, "profile")) {
        if (current) Fail("'profile' before 'end' of profile opened on line " +
                          std::to_string(open_line));
        std::string_view name = TrimView(trimmed.substr(7));
        if (name.empty() || name.find_first_of(" \t/:") != std::string_view::npos) {
          Fail("expected a single profile name after 'profile'");
        }
        current.emplace();
        current->type_name = std::string(name);
        open_line = line_;
        continue;
      }
      if (trimmed == "end") {
        if (!current) Fail("'end' without an open profile");
        Finish(*current, open_line);
        if (store.Find(current->type_name) != nullptr) {
          throw Error(ErrorCode::kDuplicateProfile,
                      std::string(source_) + ":" + std::to_string(open_line) +
                          ": profile '" + current->type_name +
                          "' is declared more than once");
        }
        store.Add(std::move(*current));
        current.reset();
        continue;
      }
      if (!current) Fail("field outside of a profile block");
      auto colon = trimmed.find(':');
      if (colon == std::string_view::npos) Fail("expected 'key: value'");
      std::string_view key = TrimView(trimmed.substr(0, colon));
      std::string_view value = TrimView(trimmed.substr(colon + 1));
      column_ += static_cast<int>(value.data() - trimmed.data());
      if (value.empty()) Fail("empty value for '" + std::string(key) + "'");
      Field(*current, key, value);
    }
    if (current) {
      line_ = open_line;
      column_ = 1;
      Fail("profile '" + current->type_name + "' is missing 'end'");
    }
    return store;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(std::string(source_), line_, column_, what);
  }

  static bool StartsWithWord(std::string_view s, std::string_view word) {
    return s.substr(0, word.size()) == word &&
           (s.size() == word.size() || s[word.size()] == ' ' ||
            s[word.size()] == '\t');
  }

  std::pair<std::string, std::string> SplitBar(std::string_view value) const {
    auto bar = value.find('|');
    if (bar == std::string_view::npos) return {std::string(value), {}};
    return {std::string(TrimView(value.substr(0, bar))),
            std::string(TrimView(value.substr(bar + 1)))};
  }

  RoleSpec Role(std::string_view value) const {
    auto [name, kind] = SplitBar(value);
    if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
      Fail("role name must be a single token");
    }
    return RoleSpec{std::move(name), std::move(kind)};
  }

  ModalEntry Modal(std::string_view value) const {
    auto [text, modality] = SplitBar(value);
    ModalEntry e{std::move(text), Modality::kUnspecified};
    if (modality == "possible") {
      e.modality = Modality::kPossible;
    } else if (modality == "necessary") {
      e.modality = Modality::kNecessary;
    } else if (!modality.empty()) {
      Fail("modality must be 'possible' or 'necessary', got '" + modality + "'");
    }
    return e;
  }

  RoleClass ParseRoleClass(std::string_view word) const {
    if (word == "active") return RoleClass::kActive;
    if (word == "passive") return RoleClass::kPassive;
    if (word == "tool") return RoleClass::kTool;
    Fail("expected active, passive or tool; got '" + std::string(word) + "'");
  }

  void Field(EventTypeProfile& p, std::string_view key, std::string_view value) {
    if (key == "classification") {
      if (value == "accomplishment") {
        p.classification = Classification::kAccomplishment;
      } else if (value == "achievement") {
        p.classification = Classification::kAchievement;
      } else {
        Fail("classification must be accomplishment or achievement");
      }
      seen_classification_ = true;
    } else if (key == "active") {
      p.active_roles.push_back(Role(value));
    } else if (key == "passive") {
      p.passive_roles.push_back(Role(value));
    } else if (key == "tool") {
      p.tool_roles.push_back(Role(value));
    } else if (key == "subevent") {
      p.subevent_types.push_back(Modal(value));
    } else if (key == "sovraevent") {
      p.sovraevent_types.push_back(Modal(value));
    } else if (key == "status-before") {
      p.status_before.emplace_back(value);
    } else if (key == "status-during") {
      p.status_during.emplace_back(value);
    } else if (key == "status-after") {
      p.status_after.emplace_back(value);
    } else if (key == "causes") {
      p.caused_events.push_back(Modal(value));
    } else if (key == "symmetrical") {
      p.symmetrical_events.push_back(Modal(value));
    } else if (key == "incompatible") {
      p.incompatible_events.push_back(Modal(value));
    } else if (key == "cardinality") {
      // "<class> >= <n>"
      auto ge = value.find(">=");
      if (ge == std::string_view::npos) Fail("expected '<class> >= <count>'");
      RoleClass c = ParseRoleClass(TrimView(value.substr(0, ge)));
      std::string_view count = TrimView(value.substr(ge + 2));
      int n = 0;
      if (!ParseInt(count, n) || n < 0) Fail("cardinality must be a count >= 0");
      p.participant_cardinality.push_back(CardinalityBound{c, n});
    } else if (key == "temporal") {
      if (value == "atomic") {
        p.temporal_region = TemporalRegion::kAtomic;
      } else if (value == "interval") {
        p.temporal_region = TemporalRegion::kInterval;
      } else {
        Fail("temporal must be atomic or interval");
      }
      seen_temporal_ = true;
    } else if (key == "spatial") {
      for (auto word : SplitWords(value)) {
        p.spatial_anchor.push_back(ParseRoleClass(word));
      }
    } else if (key == "repeatability") {
      auto words = SplitWords(value);
      if (words.size() != 2) Fail("expected '<anchor> <at-most-one|many>'");
      RepeatabilityConstraint r{};
      if (words[0] == "active") {
        r.anchor = RepeatAnchor::kActive;
      } else if (words[0] == "passive") {
        r.anchor = RepeatAnchor::kPassive;
      } else if (words[0] == "spatiotemporal") {
        r.anchor = RepeatAnchor::kSpatiotemporal;
      } else {
        Fail("repeatability anchor must be active, passive or spatiotemporal");
      }
      if (words[1] == "at-most-one") {
        r.multiplicity = Multiplicity::kAtMostOne;
      } else if (words[1] == "many") {
        r.multiplicity = Multiplicity::kMany;
      } else {
        Fail("repeatability multiplicity must be at-most-one or many");
      }
      if (p.RepeatabilityOf(r.anchor)) {
        Fail("repeatability for '" + std::string(words[0]) + "' given twice");
      }
      p.repeatability.push_back(r);
    } else {
      Fail("unknown field '" + std::string(key) + "'");
    }
  }

  // Checks that need the whole block.
  void Finish(const EventTypeProfile& p, int open_line) {
    line_ = open_line;
    column_ = 1;
    if (!seen_classification_) Fail("profile '" + p.type_name + "' has no classification");
    if (!seen_temporal_) Fail("profile '" + p.type_name + "' has no temporal region");
    seen_classification_ = seen_temporal_ = false;

    std::set<std::string> names;
    for (RoleClass c : {RoleClass::kActive, RoleClass::kPassive, RoleClass::kTool}) {
      for (const auto& r : p.Roles(c)) {
        if (!names.insert(r.name).second) {
          Fail("role '" + r.name + "' declared twice in profile '" +
               p.type_name + "'");
        }
      }
    }
    auto require_class = [&](RoleClass c, std::string_view what) {
      if (p.Roles(c).empty()) {
        throw Error(ErrorCode::kUnknownRoleReference,
                    std::string(source_) + ":" + std::to_string(open_line) +
                        ": profile '" + p.type_name + "' " + std::string(what) +
                        " references " + std::string(RoleClassName(c)) +
                        " participants but declares none");
      }
    };
    for (const auto& b : p.participant_cardinality) {
      if (b.min_count > 0) require_class(b.role_class, "cardinality");
    }
    for (RoleClass c : p.spatial_anchor) require_class(c, "spatial region");
    for (const auto& r : p.repeatability) {
      if (r.anchor == RepeatAnchor::kActive) require_class(RoleClass::kActive, "repeatability");
      if (r.anchor == RepeatAnchor::kPassive) require_class(RoleClass::kPassive, "repeatability");
    }
  }

  std::string_view text_;
  std::string_view source_;
  int line_ = 0;
  int column_ = 1;
  bool seen_classification_ = false;
  bool seen_temporal_ = false;
};

void AppendModal(std::ostringstream& out, std::string_view key,
                 const std::vector<ModalEntry>& entries) {
  for (const auto& e : entries) {
    out << key << ": " << e.text;
    if (e.modality != Modality::kUnspecified) out << " | " << ModalityName(e.modality);
    out << '\n';
  }
}

}  // namespace

ProfileStore ParseProfiles(std::string_view text, std::string_view source_name) {
  return ProfileParser(text, source_name).Parse();
}

ProfileStore LoadProfiles(const std::string& path) {
  return ParseProfiles(ReadFile(path), path);
}

std::string FormatProfiles(const ProfileStore& store) {
  std::ostringstream out;
  bool first = true;
  for (const auto& name : store.TypeNames()) {
    const EventTypeProfile& p = *store.Find(name);
    if (!first) out << '\n';
    first = false;
    out << "profile " << p.type_name << '\n';
    out << "classification: " << ClassificationName(p.classification) << '\n';
    for (RoleClass c : {RoleClass::kActive, RoleClass::kPassive, RoleClass::kTool}) {
      for (const auto& r : p.Roles(c)) {
        out << RoleClassName(c) << ": " << r.name;
        if (!r.kind.empty()) out << " | " << r.kind;
        out << '\n';
      }
    }
    AppendModal(out, "subevent", p.subevent_types);
    AppendModal(out, "sovraevent", p.sovraevent_types);
    for (const auto& s : p.status_before) out << "status-before: " << s << '\n';
    for (const auto& s : p.status_during) out << "status-during: " << s << '\n';
    for (const auto& s : p.status_after) out << "status-after: " << s << '\n';
    AppendModal(out, "causes", p.caused_events);
    AppendModal(out, "symmetrical", p.symmetrical_events);
    AppendModal(out, "incompatible", p.incompatible_events);
    for (const auto& b : p.participant_cardinality) {
      out << "cardinality: " << RoleClassName(b.role_class) << " >= " << b.min_count << '\n';
    }
    if (!p.spatial_anchor.empty()) {
      out << "spatial:";
      for (RoleClass c : p.spatial_anchor) out << ' ' << RoleClassName(c);
      out << '\n';
    }
    out << "temporal: " << TemporalRegionName(p.temporal_region) << '\n';
    for (const auto& r : p.repeatability) {
      out << "repeatability: " << RepeatAnchorName(r.anchor) << ' '
          << MultiplicityName(r.multiplicity) << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

RepeatabilityReport CheckRepeatability(const Partition& clusters,
                                       const Corpus& corpus,
                                       const ProfileStore& store) {
  RepeatabilityReport report;
  // (type, anchor, shared key) -> mentions carrying it.
  std::map<std::tuple<std::string, RepeatAnchor, std::string>,
           std::vector<std::string>>
      buckets;
  for (const EventDescription& e : corpus.mentions()) {
    const EventTypeProfile* profile = store.Find(e.event_type);
    if (profile == nullptr) {
      report.unknown_type_mentions.push_back(e.id);
      continue;
    }
    for (const auto& constraint : profile->repeatability) {
      if (constraint.multiplicity != Multiplicity::kAtMostOne) continue;
      std::set<std::string> keys;
      if (constraint.anchor == RepeatAnchor::kSpatiotemporal) {
        if (e.time && e.place) keys.insert(e.time->ToString() + "@" + e.place->id.id());
      } else {
        const RoleClass cls = constraint.anchor == RepeatAnchor::kActive
                                  ? RoleClass::kActive
                                  : RoleClass::kPassive;
        for (const auto& part : e.participants) {
          if (profile->ClassOf(part.role) == cls) keys.insert(part.entity.id());
        }
      }
      for (const auto& key : keys) {
        buckets[{e.event_type, constraint.anchor, key}].push_back(e.id);
      }
    }
  }

  std::set<std::tuple<MentionPair, RepeatAnchor>> reported;
  for (const auto& [bucket, members] : buckets) {
    const auto& [type, anchor, key] = bucket;
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        if (members[i] == members[j]) continue;
        if (clusters.SameBlock(members[i], members[j])) continue;
        MentionPair pair(members[i], members[j]);
        // Buckets iterate in key order, so the first shared key wins.
        if (!reported.insert({pair, anchor}).second) continue;
        report.violations.push_back(ConstraintViolation{type, anchor, pair, key});
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const ConstraintViolation& x, const ConstraintViolation& y) {
              return std::tie(x.pair, x.type_name, x.anchor) <
                     std::tie(y.pair, y.type_name, y.anchor);
            });
  return report;
}

}  // namespace evcoref
