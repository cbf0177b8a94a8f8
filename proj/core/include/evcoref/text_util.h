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

#ifndef EVCOREF_TEXT_UTIL_H_
#define EVCOREF_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the line-oriented file parsers.
namespace evcoref {

struct NumberedLine {
  int number;  // 1-based
  std::string_view text;
};

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<NumberedLine> SplitLines(std::string_view text);

// Everything before the first '#'.
std::string_view StripComment(std::string_view line);

std::string_view TrimView(std::string_view s);

std::vector<std::string_view> SplitWords(std::string_view s);

bool ParseInt(std::string_view s, int& out);

// Throws Error(kIoError).
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace evcoref

#endif  // EVCOREF_TEXT_UTIL_H_
