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

#ifndef EVCOREF_BASELINE_H_
#define EVCOREF_BASELINE_H_

#include <set>
#include <string>
#include <string_view>

#include "evcoref/corpus.h"
#include "evcoref/engine.h"
#include "evcoref/partition.h"

namespace evcoref {

// Mentions sharing the exact (case-sensitive) lemma form one block, within
// the document, the topic, or the whole corpus depending on scope.
// Throws Error(kMissingLemma) if a mention has a blank lemma.
Partition LemmaBaseline(const Corpus& corpus, Scope scope = Scope::kWithinTopic);

using Lexicon = std::set<std::string, std::less<>>;

// One lemma per line, '#' comments, surrounding whitespace ignored.
Lexicon ParseLexicon(std::string_view text);
Lexicon LoadLexicon(const std::string& path);

// Keeps mentions whose lemma is in the lexicon. Gold partitions are
// restricted to the surviving mentions; topics left empty are dropped.
Corpus LemmaFilter(const Corpus& corpus, const Lexicon& lexicon);

}  // namespace evcoref

#endif  // EVCOREF_BASELINE_H_
