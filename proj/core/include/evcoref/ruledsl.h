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

#ifndef EVCOREF_RULEDSL_H_
#define EVCOREF_RULEDSL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evcoref/model.h"

namespace evcoref {

class ProfileStore;

enum class ConditionKind {
  kEq,             // ==
  kCompat,         // ~
  kSubeventCoref,  // hasCoref
};

enum class Side { kE1, kE2 };

inline constexpr std::string_view kTimeFeature = "Time";
inline constexpr std::string_view kPlaceFeature = "Place";
inline constexpr std::string_view kSubEventFeature = "SubEvent";

// `E1.<feature>` or `E2.<feature>`; the feature is a role name or one of
// Time, Place, SubEvent.
struct Accessor {
  Side side = Side::kE1;
  std::string feature;

  bool IsTime() const { return feature == kTimeFeature; }
  bool IsPlace() const { return feature == kPlaceFeature; }
  bool IsSubEvent() const { return feature == kSubEventFeature; }
  bool IsRole() const { return !IsTime() && !IsPlace() && !IsSubEvent(); }

  std::string ToString() const;

  friend bool operator==(const Accessor&, const Accessor&) = default;
};

struct Condition {
  ConditionKind kind = ConditionKind::kEq;
  Accessor lhs;  // always E1
  Accessor rhs;  // always E2

  std::string ToString() const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct CorefRule {
  std::string rule_id;
  Strength strength = Strength::kCertain;
  std::string guard_e1;
  std::string guard_e2;
  std::vector<Condition> conditions;
  // Accepted under `pragma legacy-verbatim` despite referencing a role the
  // guarded type does not declare. Such a rule cannot fire on valid data.
  bool legacy = false;
  int line = 0;

  bool cross_type() const { return guard_e1 != guard_e2; }
  // "Killing" or "Killing/Dying".
  std::string GuardKey() const;
  bool UsesSubevents() const;

  friend bool operator==(const CorefRule& a, const CorefRule& b) {
    return a.rule_id == b.rule_id && a.strength == b.strength &&
           a.guard_e1 == b.guard_e1 && a.guard_e2 == b.guard_e2 &&
           a.conditions == b.conditions && a.legacy == b.legacy;
  }
};

struct RuleSet {
  // File order.
  std::vector<CorefRule> rules;
  // Lint findings: legacy role references and duplicated rules.
  std::vector<std::string> warnings;
  bool legacy_verbatim = false;

  const CorefRule* Find(std::string_view rule_id) const;
};

// Parses the rule language (grammar in docs/formats.md), validating roles
// against the profiles. Rule ids are "<guard>.<strength>.<n>" with n counting
// from 1 per guard and strength in file order.
//
// Throws ParseError, Error(kUnknownRole), Error(kEmptyConjunction), and
// Error(kUnknownEventType) for a guard without a profile.
RuleSet ParseRules(std::string_view text, const ProfileStore& profiles,
                   std::string_view source = "<rules>");
RuleSet LoadRules(const std::string& path, const ProfileStore& profiles);

// "certain Killing: E1.Victim == E2.Victim"
std::string FormatRule(const CorefRule& rule);
// Re-parsable text for a whole rule set, pragma included.
std::string FormatRules(const RuleSet& rules);

struct StrengthCounts {
  int certain = 0;
  int possible = 0;

  friend bool operator==(const StrengthCounts&, const StrengthCounts&) = default;
};

class RuleCountReport {
 public:
  explicit RuleCountReport(const RuleSet& rules);

  // Zero counts for guards without rules.
  StrengthCounts For(std::string_view guard_key) const;
  const std::map<std::string, StrengthCounts, std::less<>>& by_guard() const {
    return counts_;
  }
  int total() const;

  // One aligned line per guard: "<guard>  certain <c>  possible <p>".
  std::string ToText() const;

 private:
  std::map<std::string, StrengthCounts, std::less<>> counts_;
};

}  // namespace evcoref

#endif  // EVCOREF_RULEDSL_H_
