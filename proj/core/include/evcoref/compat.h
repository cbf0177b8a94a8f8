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

#ifndef EVCOREF_COMPAT_H_
#define EVCOREF_COMPAT_H_

#include <optional>
#include <span>

#include "evcoref/model.h"

// Equality (==) and compatibility (~) over event features. Every comparator
// is symmetric, and a missing value on either side makes it false.
namespace evcoref::compat {

bool EntityEq(const EntityRef& a, const EntityRef& b);

// Both intervals are truncated to the coarser of the two granularities and
// then tested for intersection. Inclusion is the common special case.
bool TimeCompat(const std::optional<TimeSpec>& a,
                const std::optional<TimeSpec>& b);

// Same granularity and identical bounds.
bool TimeEq(const std::optional<TimeSpec>& a, const std::optional<TimeSpec>& b);

// Same location, or one location contains the other per its ancestry list.
bool PlaceCompat(const std::optional<PlaceSpec>& a,
                 const std::optional<PlaceSpec>& b);

bool PlaceEq(const std::optional<PlaceSpec>& a,
             const std::optional<PlaceSpec>& b);

// Multi-valued roles match when some filler of `a` equals some filler of `b`.
bool RoleEq(std::span<const EntityRef> a, std::span<const EntityRef> b);

// Tools are ordinary roles; kept as a named entry point for readability at
// call sites that compare instruments.
inline bool ToolEq(std::span<const EntityRef> a, std::span<const EntityRef> b) {
  return RoleEq(a, b);
}

}  // namespace evcoref::compat

#endif  // EVCOREF_COMPAT_H_
