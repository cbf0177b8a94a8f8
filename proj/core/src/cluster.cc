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

#include "evcoref/cluster.h"

#include <map>
#include <numeric>
#include <unordered_map>

#include "evcoref/corpus.h"

namespace evcoref {

std::string_view ClusterModeName(ClusterMode m) {
  switch (m) {
    case ClusterMode::kCertainOnly: return "certain";
    case ClusterMode::kPossibleOnly: return "possible";
    case ClusterMode::kCombined: return "combined";
  }
  return "?";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }

  size_t Find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(size_t x, size_t y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
  }

 private:
  std::vector<size_t> parent_;
  std::vector<int> rank_;
};

}  // namespace

Partition Clusters(const CorefGraph& graph, ClusterMode mode) {
  const auto& nodes = graph.nodes();
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

  DisjointSets sets(nodes.size());
  auto add = [&](Strength s) {
    for (const auto& [pair, _] : graph.edges(s)) {
      auto a = index.find(pair.a());
      auto b = index.find(pair.b());
      if (a != index.end() && b != index.end()) sets.Union(a->second, b->second);
    }
  };
  if (mode != ClusterMode::kPossibleOnly) add(Strength::kCertain);
  if (mode != ClusterMode::kCertainOnly) add(Strength::kPossible);

  std::map<size_t, std::vector<std::string>> blocks;
  for (size_t i = 0; i < nodes.size(); ++i) blocks[sets.Find(i)].push_back(nodes[i]);
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks.size());
  for (auto& [_, b] : blocks) out.push_back(std::move(b));
  return Partition(std::move(out));
}

TopicPartitions SplitByTopic(const Partition& partition, const Corpus& corpus) {
  TopicPartitions out;
  for (const auto& topic : corpus.topics()) {
    out.emplace(topic.topic_id, partition.Restrict(corpus.TopicMentionIds(topic.topic_id)));
  }
  return out;
}

}  // namespace evcoref
