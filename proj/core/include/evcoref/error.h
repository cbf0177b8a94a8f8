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

#ifndef EVCOREF_ERROR_H_
#define EVCOREF_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace evcoref {

enum class ErrorCode {
  kEmptyIdentifier,
  kParseError,
  kDuplicateProfile,
  kUnknownRoleReference,
  kUnknownEventType,
  kUnknownRole,
  kEmptyConjunction,
  kNoEdge,
  kUniverseMismatch,
  kTooFewMentions,
  kTopicMismatch,
  kSchemaError,
  kDuplicateMentionId,
  kGoldUniverseMismatch,
  kMissingLemma,
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for errors caused by malformed or inconsistent input files, as
// opposed to errors raised by a well-formed request that cannot be served.
bool IsInputError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 1-based line and column into the source text.
class ParseError : public Error {
 public:
  ParseError(std::string source, int line, int column, const std::string& what)
      : Error(ErrorCode::kParseError, source + ":" + std::to_string(line) +
                                          ":" + std::to_string(column) + ": " +
                                          what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string source_;
  int line_;
  int column_;
};

}  // namespace evcoref

#endif  // EVCOREF_ERROR_H_
