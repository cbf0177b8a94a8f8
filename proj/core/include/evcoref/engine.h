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

#ifndef EVCOREF_ENGINE_H_
#define EVCOREF_ENGINE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evcoref/model.h"

namespace evcoref {

class Corpus;
class ProfileStore;
struct RuleSet;

enum class Scope { kWithinDocument, kWithinTopic, kCrossTopic };

std::string_view ScopeName(Scope s);

// Which edge sets a hasCoref condition may consult.
enum class EdgeSource { kCertain, kPossible, kCertainAndPossible };

struct EngineOptions {
  Scope scope = Scope::kWithinTopic;
  // Rules whose two type guards differ are skipped unless set.
  bool enable_cross_type = false;
  // hasCoref inside a certain rule.
  EdgeSource certain_subevent_source = EdgeSource::kCertain;
  // hasCoref inside a possible rule.
  EdgeSource possible_subevent_source = EdgeSource::kCertainAndPossible;
  // Pair evaluation within a round is split over this many threads.
  int threads = 1;
};

// Values that satisfied one condition, as printed by Explain.
struct Binding {
  std::string condition;
  std::string e1_value;
  std::string e2_value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// How one stored edge came about.
struct Derivation {
  CorefEdge edge;
  // Mention bound to E1 when the rule fired.
  std::string e1;
  std::vector<Binding> bindings;
  // For each hasCoref condition, the subevent pair that satisfied it and the
  // strength of the edge used (nullopt when both sides named the same
  // subevent).
  struct Support {
    std::string e1_sub;
    std::string e2_sub;
    std::optional<Strength> via;
    friend bool operator==(const Support&, const Support&) = default;
  };
  std::vector<Support> supports;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Certain and possible coreference edges over the corpus mentions. Both edge
// sets are keyed by unordered pair; a pair may carry both strengths.
class CorefGraph {
 public:
  CorefGraph() = default;
  explicit CorefGraph(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {}

  // Sorted mention ids the graph was computed over.
  const std::vector<std::string>& nodes() const { return nodes_; }
  int rounds() const { return rounds_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::map<MentionPair, Derivation>& edges(Strength s) const {
    return s == Strength::kCertain ? certain_ : possible_;
  }
  bool Has(const MentionPair& pair, Strength s) const {
    return edges(s).count(pair) > 0;
  }
  const Derivation* Find(const MentionPair& pair, Strength s) const;

  // Edges of one strength, or of both, in (pair, strength) order.
  std::vector<CorefEdge> EdgeList() const;
  size_t size(Strength s) const { return edges(s).size(); }

  // Returns false if an edge of that strength already exists for the pair.
  bool Insert(Derivation d);
  void set_rounds(int r) { rounds_ = r; }
  void AddWarning(std::string w) { warnings_.push_back(std::move(w)); }

  friend bool operator==(const CorefGraph& a, const CorefGraph& b) {
    return a.nodes_ == b.nodes_ && a.certain_ == b.certain_ &&
           a.possible_ == b.possible_ && a.rounds_ == b.rounds_;
  }

 private:
  std::vector<std::string> nodes_;
  std::map<MentionPair, Derivation> certain_;
  std::map<MentionPair, Derivation> possible_;
  int rounds_ = 0;
  std::vector<std::string> warnings_;
};

// Applies the rules to every in-scope pair of mentions until a round derives
// nothing new. Each round reads the edges present at the end of the previous
// round, so the result does not depend on pair enumeration order. When
// several rules fire for a pair in the same round, the first rule in file
// order is recorded; for same-type rules the (a, b) orientation is tried
// before (b, a).
//
// Mentions whose type has no profile are skipped and reported in
// CorefGraph::warnings().
CorefGraph Evaluate(const Corpus& corpus, const RuleSet& rules,
                    const ProfileStore& profiles,
                    const EngineOptions& options = {});

// 1 for a certain pair, `possible_weight` for a possible-only pair, else 0.
CorefMeasureValue Measure(const CorefGraph& graph, const MentionPair& pair,
                          double possible_weight = 0.5);

struct ExplainStep {
  int depth = 0;
  Derivation derivation;
};

// Derivation trace for the strongest edge on the pair, supporting subevent edges
// first (deepest first), so steps read in round order. Throws
// Error(kNoEdge) if the pair is unlinked.
std::vector<ExplainStep> Explain(const CorefGraph& graph, const MentionPair& pair);
std::string FormatExplain(const std::vector<ExplainStep>& steps);

// "<id_a> <strength> <id_b> <rule_id> <round>" per edge, sorted by pair then
// strength, after a "# rounds <n>" header line.
std::string FormatGraph(const CorefGraph& graph);

// Reads FormatGraph output back. Derivation details other than the rule id
// and round are not part of the format. `nodes` becomes the graph's node set.
CorefGraph ParseGraph(std::string_view text, std::vector<std::string> nodes,
                      std::string_view source = "<graph>");

// Every derivation with bindings, one block per edge; the derivation log.
std::string FormatDerivationLog(const CorefGraph& graph);

}  // namespace evcoref

#endif  // EVCOREF_ENGINE_H_
