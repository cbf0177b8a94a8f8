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

#ifndef EVCOREF_PARTITION_H_
#define EVCOREF_PARTITION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evcoref {

// A set of disjoint, non-empty blocks of mention ids covering a universe.
// Blocks are kept sorted internally and block order is sorted, so two
// partitions of the same sets compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws Error(kInvalidArgument) on an empty block or a repeated id.
  explicit Partition(std::vector<std::vector<std::string>> blocks);

  // Every id in its own block.
  static Partition Singletons(std::vector<std::string> ids);

  const std::vector<std::vector<std::string>>& blocks() const { return blocks_; }
  // Sorted.
  const std::vector<std::string>& universe() const { return universe_; }
  size_t size() const { return universe_.size(); }
  bool empty() const { return universe_.empty(); }

  bool Contains(std::string_view id) const;
  // Index into blocks(), or nullopt if the id is outside the universe.
  std::optional<size_t> BlockOf(std::string_view id) const;
  bool SameBlock(std::string_view a, std::string_view b) const;

  // Blocks intersected with `ids`; empty intersections dropped.
  Partition Restrict(const std::vector<std::string>& ids) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<std::string>> blocks_;
  std::vector<std::string> universe_;
  std::unordered_map<std::string, size_t> index_;
};

// Partitions keyed by topic id.
using TopicPartitions = std::map<std::string, Partition>;

// Native format: one block per line, "<topic>\t<id> <id> ...", ids sorted
// within a line, lines sorted by topic then block.
std::string FormatNativePartitions(const TopicPartitions& parts);
TopicPartitions ParseNativePartitions(std::string_view text,
                                      std::string_view source = "<partition>");

// Mention-level CoNLL-style cluster format understood by the reference
// coreference scorer: one "#begin document (<topic>);" section per topic,
// one line per mention "<topic>\t0\t<mention>\t(<cluster>)", and
// "#end document".
std::string FormatConllPartitions(const TopicPartitions& parts);
TopicPartitions ParseConllPartitions(std::string_view text,
                                     std::string_view source = "<conll>");

// Picks the parser by sniffing for a "#begin document" line.
TopicPartitions ParsePartitions(std::string_view text,
                                std::string_view source = "<partition>");
TopicPartitions LoadPartitions(const std::string& path);

// Union of all topic partitions into one, for global scoring.
Partition MergeTopics(const TopicPartitions& parts);

}  // namespace evcoref

#endif  // EVCOREF_PARTITION_H_
