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

#ifndef EVCOREF_ONTOLOGY_H_
#define EVCOREF_ONTOLOGY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evcoref/model.h"

namespace evcoref {

class Corpus;
class Partition;

enum class Classification { kAccomplishment, kAchievement };
enum class TemporalRegion { kAtomic, kInterval };
enum class Modality { kPossible, kNecessary, kUnspecified };
enum class RoleClass { kActive, kPassive, kTool };
enum class RepeatAnchor { kActive, kPassive, kSpatiotemporal };
enum class Multiplicity { kAtMostOne, kMany };

std::string_view ClassificationName(Classification c);
std::string_view TemporalRegionName(TemporalRegion t);
std::string_view ModalityName(Modality m);
std::string_view RoleClassName(RoleClass r);
std::string_view RepeatAnchorName(RepeatAnchor a);
std::string_view MultiplicityName(Multiplicity m);

struct RoleSpec {
  std::string name;
  // Free-text entity kind, e.g. "living entity".
  std::string kind;

  friend bool operator==(const RoleSpec&, const RoleSpec&) = default;
};

// A description tagged with possible/necessary, used for sub/sovra-events,
// caused, symmetrical and incompatible events.
struct ModalEntry {
  std::string text;
  Modality modality = Modality::kUnspecified;

  friend bool operator==(const ModalEntry&, const ModalEntry&) = default;
};

struct RepeatabilityConstraint {
  RepeatAnchor anchor;
  Multiplicity multiplicity;

  friend bool operator==(const RepeatabilityConstraint&,
                         const RepeatabilityConstraint&) = default;
};

struct CardinalityBound {
  RoleClass role_class;
  int min_count = 0;

  friend bool operator==(const CardinalityBound&,
                         const CardinalityBound&) = default;
};

struct EventTypeProfile {
  std::string type_name;
  Classification classification = Classification::kAchievement;
  std::vector<RoleSpec> active_roles;
  std::vector<RoleSpec> passive_roles;
  std::vector<RoleSpec> tool_roles;
  std::vector<ModalEntry> subevent_types;
  std::vector<ModalEntry> sovraevent_types;
  std::vector<std::string> status_before;
  std::vector<std::string> status_during;
  std::vector<std::string> status_after;
  std::vector<ModalEntry> caused_events;
  std::vector<ModalEntry> symmetrical_events;
  std::vector<ModalEntry> incompatible_events;
  std::vector<CardinalityBound> participant_cardinality;
  TemporalRegion temporal_region = TemporalRegion::kAtomic;
  // Role classes whose location anchors the event location.
  std::vector<RoleClass> spatial_anchor;
  std::vector<RepeatabilityConstraint> repeatability;

  bool HasRole(std::string_view role) const;
  std::optional<RoleClass> ClassOf(std::string_view role) const;
  const std::vector<RoleSpec>& Roles(RoleClass c) const;
  std::optional<Multiplicity> RepeatabilityOf(RepeatAnchor anchor) const;

  friend bool operator==(const EventTypeProfile&,
                         const EventTypeProfile&) = default;
};

class ProfileStore {
 public:
  ProfileStore() = default;

  // Throws Error(kDuplicateProfile) if the type is already present.
  void Add(EventTypeProfile profile);

  const EventTypeProfile* Find(std::string_view type_name) const;
  bool empty() const { return profiles_.empty(); }
  size_t size() const { return profiles_.size(); }
  // Sorted by type name.
  std::vector<std::string> TypeNames() const;

  friend bool operator==(const ProfileStore&, const ProfileStore&) = default;

 private:
  std::map<std::string, EventTypeProfile, std::less<>> profiles_;
};

// Parses the profile text format (see docs/formats.md). `source_name` only
// labels error positions.
ProfileStore ParseProfiles(std::string_view text,
                           std::string_view source_name = "<profiles>");
ProfileStore LoadProfiles(const std::string& path);

// Inverse of ParseProfiles.
std::string FormatProfiles(const ProfileStore& store);

struct ConstraintViolation {
  std::string type_name;
  RepeatAnchor anchor;
  MentionPair pair;
  // Shared participant id, or the shared time@place for spatio-temporal
  // anchors.
  std::string shared;

  friend bool operator==(const ConstraintViolation&,
                         const ConstraintViolation&) = default;
};

struct RepeatabilityReport {
  std::vector<ConstraintViolation> violations;
  // Mention ids whose type has no profile; they are skipped.
  std::vector<std::string> unknown_type_mentions;
};

// Flags same-type mention pairs that sit in different clusters although an
// at-most-one repeatability constraint says they must denote one event.
// A passive/active anchor fires on a shared filler of that role class; a
// spatio-temporal anchor fires on equal time and equal place.
RepeatabilityReport CheckRepeatability(const Partition& clusters,
                                       const Corpus& corpus,
                                       const ProfileStore& store);

}  // namespace evcoref

#endif  // EVCOREF_ONTOLOGY_H_
