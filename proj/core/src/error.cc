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

#include "evcoref/error.h"

namespace evcoref {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyIdentifier: return "EmptyIdentifier";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateProfile: return "DuplicateProfile";
    case ErrorCode::kUnknownRoleReference: return "UnknownRoleReference";
    case ErrorCode::kUnknownEventType: return "UnknownEventType";
    case ErrorCode::kUnknownRole: return "UnknownRole";
    case ErrorCode::kEmptyConjunction: return "EmptyConjunction";
    case ErrorCode::kNoEdge: return "NoEdge";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kTooFewMentions: return "TooFewMentions";
    case ErrorCode::kTopicMismatch: return "TopicMismatch";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kDuplicateMentionId: return "DuplicateMentionId";
    case ErrorCode::kGoldUniverseMismatch: return "GoldUniverseMismatch";
    case ErrorCode::kMissingLemma: return "MissingLemma";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

bool IsInputError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoEdge:
    case ErrorCode::kUniverseMismatch:
    case ErrorCode::kTooFewMentions:
    case ErrorCode::kTopicMismatch:
    case ErrorCode::kUnknownEventType:
      return false;
    default:
      return true;
  }
}

}  // namespace evcoref
