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

#ifndef EVCOREF_MODEL_H_
#define EVCOREF_MODEL_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evcoref {

// A participant or location identifier. Equality is byte equality of the
// normalized id; the surface string is display-only.
class EntityRef {
 public:
  // Requires an already-normalized, non-empty id. Use NormalizeEntity for raw
  // input.
  explicit EntityRef(std::string id, std::string surface = {});

  const std::string& id() const { return id_; }
  const std::string& surface() const { return surface_; }

  friend bool operator==(const EntityRef& a, const EntityRef& b) {
    return a.id_ == b.id_;
  }
  friend std::strong_ordering operator<=>(const EntityRef& a,
                                          const EntityRef& b) {
    return a.id_ <=> b.id_;
  }

 private:
  std::string id_;
  std::string surface_;
};

// Trims surrounding whitespace and lower-cases the prefix before the first
// ':' (the scheme or namespace). The local part is kept byte-for-byte.
// Throws Error(kEmptyIdentifier) for blank input.
EntityRef NormalizeEntity(std::string_view raw, std::string surface = {});

enum class Granularity { kYear = 1, kMonth = 2, kDay = 3, kHour = 4, kMinute = 5 };

std::string_view GranularityName(Granularity g);

// A calendar instant truncated to a granularity. Fields finer than the
// granularity do not exist; they are never compared.
class CalendarPoint {
 public:
  // fields = {year, month, day, hour, minute}; only the first
  // static_cast<int>(g) entries are read.
  CalendarPoint(Granularity g, std::array<int, 5> fields);

  Granularity granularity() const { return granularity_; }
  int field(int index) const { return fields_[index]; }

  // Drops every field finer than g. g must not be finer than granularity().
  CalendarPoint Truncated(Granularity g) const;

  // ISO-8601 prefix: "1980", "1980-12", "1980-12-08", "1980-12-08T22",
  // "1980-12-08T22:50".
  std::string ToString() const;

  friend bool operator==(const CalendarPoint& a, const CalendarPoint& b);
  // Lexicographic over present fields; only meaningful for equal
  // granularities.
  friend std::strong_ordering operator<=>(const CalendarPoint& a,
                                          const CalendarPoint& b);

 private:
  Granularity granularity_;
  std::array<int, 5> fields_{};
};

// Parses one ISO-8601 prefix as produced by CalendarPoint::ToString.
// Throws Error(kSchemaError) on malformed or out-of-range input.
CalendarPoint ParseCalendarPoint(std::string_view text);

struct TimeSpec {
  CalendarPoint start;
  CalendarPoint end;

  TimeSpec(CalendarPoint start, CalendarPoint end);
  explicit TimeSpec(CalendarPoint instant) : TimeSpec(instant, instant) {}

  Granularity granularity() const { return start.granularity(); }

  // "1980-12-08" for an instant, "1980-12-08/1980-12-10" for an interval.
  std::string ToString() const;

  friend bool operator==(const TimeSpec&, const TimeSpec&) = default;
};

TimeSpec ParseTimeSpec(std::string_view text);

struct PlaceSpec {
  EntityRef id;
  // Containing locations, most specific first.
  std::vector<EntityRef> ancestry;

  explicit PlaceSpec(EntityRef id, std::vector<EntityRef> ancestry = {});

  friend bool operator==(const PlaceSpec&, const PlaceSpec&) = default;
};

struct Participant {
  std::string role;
  EntityRef entity;

  friend bool operator==(const Participant& a, const Participant& b) {
    return a.role == b.role && a.entity == b.entity &&
           a.entity.surface() == b.entity.surface();
  }
  friend auto operator<=>(const Participant& a, const Participant& b) {
    if (auto c = a.role <=> b.role; c != 0) return c;
    return a.entity <=> b.entity;
  }
};

// One mention-level event record: type, roled participants, time, place,
// plus lemma and provenance.
struct EventDescription {
  std::string id;
  std::string event_type;
  std::vector<Participant> participants;
  std::optional<TimeSpec> time;
  std::optional<PlaceSpec> place;
  std::vector<std::string> subevents;
  std::string lemma;
  std::string doc_id;
  std::string topic_id;

  // All entities filling `role`, in record order.
  std::vector<EntityRef> Fillers(std::string_view role) const;

  friend bool operator==(const EventDescription&,
                         const EventDescription&) = default;
};

enum class Strength { kCertain, kPossible };

std::string_view StrengthName(Strength s);
std::optional<Strength> ParseStrength(std::string_view text);

// An unordered pair of distinct mention ids, stored with a < b.
class MentionPair {
 public:
  MentionPair(std::string x, std::string y);

  const std::string& a() const { return a_; }
  const std::string& b() const { return b_; }

  friend bool operator==(const MentionPair&, const MentionPair&) = default;
  friend auto operator<=>(const MentionPair&, const MentionPair&) = default;

 private:
  std::string a_;
  std::string b_;
};

struct CorefEdge {
  MentionPair pair;
  Strength strength;
  std::string rule_id;
  int iteration = 0;

  friend bool operator==(const CorefEdge&, const CorefEdge&) = default;
};

class CorefMeasureValue {
 public:
  explicit CorefMeasureValue(double value);
  double value() const { return value_; }

 private:
  double value_;
};

}  // namespace evcoref

#endif  // EVCOREF_MODEL_H_
