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

#include "evcoref/model.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "evcoref/error.h"

namespace evcoref {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool IsLeapYear(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int DaysInMonth(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  return m == 2 && IsLeapYear(y) ? 29 : kDays[m - 1];
}

[[noreturn]] void BadTime(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kSchemaError,
              "invalid time '" + std::string(text) + "': " + why);
}

}  // namespace

EntityRef::EntityRef(std::string id, std::string surface)
    : id_(std::move(id)), surface_(std::move(surface)) {
  if (id_.empty()) throw Error(ErrorCode::kEmptyIdentifier, "empty entity id");
}

EntityRef NormalizeEntity(std::string_view raw, std::string surface) {
  std::string_view trimmed = Trim(raw);
  if (trimmed.empty()) {
    throw Error(ErrorCode::kEmptyIdentifier,
                "entity identifier is blank: '" + std::string(raw) + "'");
  }
  std::string id(trimmed);
  if (auto colon = id.find(':'); colon != std::string::npos) {
    std::transform(id.begin(), id.begin() + colon, id.begin(), [](char c) {
      return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    });
  }
  return EntityRef(std::move(id), std::move(surface));
}

std::string_view GranularityName(Granularity g) {
  switch (g) {
    case Granularity::kYear: return "year";
    case Granularity::kMonth: return "month";
    case Granularity::kDay: return "day";
    case Granularity::kHour: return "hour";
    case Granularity::kMinute: return "minute";
  }
  return "?";
}

CalendarPoint::CalendarPoint(Granularity g, std::array<int, 5> fields)
    : granularity_(g) {
  const int n = static_cast<int>(g);
  for (int i = 0; i < n; ++i) fields_[i] = fields[i];
  if (n >= 2 && (fields_[1] < 1 || fields_[1] > 12)) {
    throw Error(ErrorCode::kSchemaError, "month out of range");
  }
  if (n >= 3 && (fields_[2] < 1 || fields_[2] > DaysInMonth(fields_[0], fields_[1]))) {
    throw Error(ErrorCode::kSchemaError, "day out of range");
  }
  if (n >= 4 && (fields_[3] < 0 || fields_[3] > 23)) {
    throw Error(ErrorCode::kSchemaError, "hour out of range");
  }
  if (n >= 5 && (fields_[4] < 0 || fields_[4] > 59)) {
    throw Error(ErrorCode::kSchemaError, "minute out of range");
  }
}

CalendarPoint CalendarPoint::Truncated(Granularity g) const {
  std::array<int, 5> f{};
  const int n = std::min(static_cast<int>(g), static_cast<int>(granularity_));
  for (int i = 0; i < n; ++i) f[i] = fields_[i];
  return CalendarPoint(static_cast<Granularity>(n), f);
}

std::string CalendarPoint::ToString() const {
  char buf[32];
  const int n = static_cast<int>(granularity_);
  int len = std::snprintf(buf, sizeof buf, "%04d", fields_[0]);
  if (n >= 2) len += std::snprintf(buf + len, sizeof buf - len, "-%02d", fields_[1]);
  if (n >= 3) len += std::snprintf(buf + len, sizeof buf - len, "-%02d", fields_[2]);
  if (n >= 4) len += std::snprintf(buf + len, sizeof buf - len, "T%02d", fields_[3]);
  if (n >= 5) std::snprintf(buf + len, sizeof buf - len, ":%02d", fields_[4]);
  return buf;
}

bool operator==(const CalendarPoint& a, const CalendarPoint& b) {
  if (a.granularity_ != b.granularity_) return false;
  const int n = static_cast<int>(a.granularity_);
  return std::equal(a.fields_.begin(), a.fields_.begin() + n,
                    b.fields_.begin());
}

std::strong_ordering operator<=>(const CalendarPoint& a,
                                 const CalendarPoint& b) {
  const int n = std::min(static_cast<int>(a.granularity_),
                         static_cast<int>(b.granularity_));
  for (int i = 0; i < n; ++i) {
    if (auto c = a.fields_[i] <=> b.fields_[i]; c != 0) return c;
  }
  return a.granularity_ <=> b.granularity_;
}

CalendarPoint ParseCalendarPoint(std::string_view text) {
  // Layout: YYYY[-MM[-DD[THH[:MM]]]]
  static constexpr char kSeparators[] = {'\0', '-', '-', 'T', ':'};
  static constexpr int kWidths[] = {4, 2, 2, 2, 2};
  std::array<int, 5> fields{};
  std::string_view rest = text;
  int count = 0;
  while (count < 5 && !rest.empty()) {
    if (count > 0) {
      if (rest.front() != kSeparators[count]) BadTime(text, "unexpected separator");
      rest.remove_prefix(1);
    }
    const int width = kWidths[count];
    if (rest.size() < static_cast<size_t>(width)) BadTime(text, "truncated field");
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + width, value);
    if (ec != std::errc() || ptr != rest.data() + width) {
      BadTime(text, "non-numeric field");
    }
    fields[count++] = value;
    rest.remove_prefix(width);
  }
  if (count == 0) BadTime(text, "empty");
  if (!rest.empty()) BadTime(text, "trailing characters");
  try {
    return CalendarPoint(static_cast<Granularity>(count), fields);
  } catch (const Error& e) {
    BadTime(text, e.what());
  }
}

TimeSpec::TimeSpec(CalendarPoint s, CalendarPoint e)
    : start(std::move(s)), end(std::move(e)) {
  if (start.granularity() != end.granularity()) {
    throw Error(ErrorCode::kSchemaError,
                "time interval bounds differ in granularity: " +
                    start.ToString() + "/" + end.ToString());
  }
  if (end < start) {
    throw Error(ErrorCode::kSchemaError, "time interval ends before it starts: " +
                                             start.ToString() + "/" +
                                             end.ToString());
  }
}

std::string TimeSpec::ToString() const {
  if (start == end) return start.ToString();
  return start.ToString() + "/" + end.ToString();
}

TimeSpec ParseTimeSpec(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return TimeSpec(ParseCalendarPoint(text));
  return TimeSpec(ParseCalendarPoint(text.substr(0, slash)),
                  ParseCalendarPoint(text.substr(slash + 1)));
}

PlaceSpec::PlaceSpec(EntityRef place, std::vector<EntityRef> chain)
    : id(std::move(place)), ancestry(std::move(chain)) {
  std::set<std::string> seen;
  for (const auto& a : ancestry) {
    if (a == id) {
      throw Error(ErrorCode::kSchemaError,
                  "place '" + id.id() + "' lists itself in its ancestry");
    }
    if (!seen.insert(a.id()).second) {
      throw Error(ErrorCode::kSchemaError, "place '" + id.id() +
                                               "' has duplicate ancestor '" +
                                               a.id() + "'");
    }
  }
}

std::vector<EntityRef> EventDescription::Fillers(std::string_view role) const {
  std::vector<EntityRef> out;
  for (const auto& p : participants) {
    if (p.role == role) out.push_back(p.entity);
  }
  return out;
}

std::string_view StrengthName(Strength s) {
  return s == Strength::kCertain ? "certain" : "possible";
}

std::optional<Strength> ParseStrength(std::string_view text) {
  if (text == "certain") return Strength::kCertain;
  if (text == "possible") return Strength::kPossible;
  return std::nullopt;
}

MentionPair::MentionPair(std::string x, std::string y) {
  if (x == y) {
    throw Error(ErrorCode::kInvalidArgument,
                "a coreference pair needs two distinct mentions, got '" + x +
                    "' twice");
  }
  if (y < x) std::swap(x, y);
  a_ = std::move(x);
  b_ = std::move(y);
}

CorefMeasureValue::CorefMeasureValue(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "coreference measure outside [0,1]: " + std::to_string(value));
  }
}

}  // namespace evcoref
