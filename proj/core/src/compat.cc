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

#include "evcoref/compat.h"

#include <algorithm>

namespace evcoref::compat {

bool EntityEq(const EntityRef& a, const EntityRef& b) { return a == b; }

bool TimeCompat(const std::optional<TimeSpec>& a,
                const std::optional<TimeSpec>& b) {
  if (!a || !b) return false;
  const Granularity g = std::min(a->granularity(), b->granularity());
  const CalendarPoint a_start = a->start.Truncated(g);
  const CalendarPoint a_end = a->end.Truncated(g);
  const CalendarPoint b_start = b->start.Truncated(g);
  const CalendarPoint b_end = b->end.Truncated(g);
  return a_start <= b_end && b_start <= a_end;
}

bool TimeEq(const std::optional<TimeSpec>& a,
            const std::optional<TimeSpec>& b) {
  if (!a || !b) return false;
  return a->start == b->start && a->end == b->end;
}

bool PlaceCompat(const std::optional<PlaceSpec>& a,
                 const std::optional<PlaceSpec>& b) {
  if (!a || !b) return false;
  if (a->id == b->id) return true;
  auto contains = [](const PlaceSpec& outer_chain, const EntityRef& needle) {
    return std::find(outer_chain.ancestry.begin(), outer_chain.ancestry.end(),
                     needle) != outer_chain.ancestry.end();
  };
  return contains(*a, b->id) || contains(*b, a->id);
}

bool PlaceEq(const std::optional<PlaceSpec>& a,
             const std::optional<PlaceSpec>& b) {
  if (!a || !b) return false;
  return EntityEq(a->id, b->id);
}

bool RoleEq(std::span<const EntityRef> a, std::span<const EntityRef> b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (EntityEq(x, y)) return true;
    }
  }
  return false;
}

}  // namespace evcoref::compat
