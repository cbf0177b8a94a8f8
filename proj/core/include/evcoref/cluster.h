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

#ifndef EVCOREF_CLUSTER_H_
#define EVCOREF_CLUSTER_H_

#include <string_view>

#include "evcoref/engine.h"
#include "evcoref/partition.h"

namespace evcoref {

class Corpus;

enum class ClusterMode { kCertainOnly, kPossibleOnly, kCombined };

std::string_view ClusterModeName(ClusterMode m);

// Connected components of the selected edge set over every graph node;
// unlinked mentions become singletons.
Partition Clusters(const CorefGraph& graph, ClusterMode mode);

// Restricts a corpus-wide partition to each topic of the corpus.
TopicPartitions SplitByTopic(const Partition& partition, const Corpus& corpus);

}  // namespace evcoref

#endif  // EVCOREF_CLUSTER_H_
