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

#ifndef EVCOREF_METRICS_H_
#define EVCOREF_METRICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evcoref/partition.h"

namespace evcoref {

struct PartitionScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // F1 is the harmonic mean, or 0 when p + r = 0.
  static PartitionScore FromPrecisionRecall(double p, double r);
};

// Numerators and denominators of a precision/recall pair. Summing counts
// over topics gives the micro average.
struct RatioCounts {
  double p_num = 0;
  double p_den = 0;
  double r_num = 0;
  double r_den = 0;

  RatioCounts& operator+=(const RatioCounts& o);
  // Both denominators zero scores 1/1/1; a single zero denominator scores 0
  // on that side.
  PartitionScore Score() const;
};

// Pair counts for BLANC. "key"/"response" count links of each kind; "right"
// counts links of that kind present in both.
struct BlancCounts {
  long long key_coref = 0;
  long long response_coref = 0;
  long long right_coref = 0;
  long long key_noncoref = 0;
  long long response_noncoref = 0;
  long long right_noncoref = 0;

  BlancCounts& operator+=(const BlancCounts& o);
  long long mentions_pairs() const { return key_coref + key_noncoref; }
  PartitionScore CorefSide() const;
  PartitionScore NonCorefSide() const;
  // Arithmetic mean of the two sides for p, r and F1.
  PartitionScore Score() const;
};

// Each throws Error(kUniverseMismatch) unless both partitions cover the same
// mention ids.
RatioCounts MucCounts(const Partition& response, const Partition& key);
RatioCounts BCubedCounts(const Partition& response, const Partition& key);
RatioCounts CeafMCounts(const Partition& response, const Partition& key);
BlancCounts BlancPairCounts(const Partition& response, const Partition& key);

PartitionScore Muc(const Partition& response, const Partition& key);
PartitionScore BCubed(const Partition& response, const Partition& key);
PartitionScore CeafM(const Partition& response, const Partition& key);
// Throws Error(kTooFewMentions) for fewer than two mentions.
PartitionScore Blanc(const Partition& response, const Partition& key);

// Optimal one-to-one alignment for mention-based CEAF, as (key block index,
// response block index) pairs with positive overlap, sorted by key index.
// Among optimal alignments the lexicographically smallest sequence of
// response indices is returned.
struct CeafAlignment {
  long long total = 0;
  std::vector<std::pair<size_t, size_t>> pairs;
};
CeafAlignment AlignCeafM(const Partition& response, const Partition& key);

// Maximum-weight assignment on a dense rows x cols weight matrix (rows may
// differ from cols). Returns, per row, the assigned column or nullopt.
std::vector<std::optional<size_t>> MaxWeightAssignment(
    const std::vector<std::vector<long long>>& weights);

enum class Metric { kMuc, kBCubed, kCeafM, kBlanc };
std::string_view MetricName(Metric m);   // "MUC", "B3", "CEAF (M)", "BLANC"
std::string_view MetricFlag(Metric m);   // "muc", "b3", "ceafm", "blanc"
std::optional<Metric> ParseMetricFlag(std::string_view flag);
inline constexpr Metric kAllMetrics[] = {Metric::kMuc, Metric::kBCubed,
                                         Metric::kCeafM, Metric::kBlanc};

enum class Averaging { kMicro, kMacro };

struct MetricScores {
  PartitionScore muc;
  PartitionScore b_cubed;
  PartitionScore ceaf_m;
  PartitionScore blanc;

  const PartitionScore& Get(Metric m) const;
  PartitionScore& Get(Metric m);
};

// Scores per-topic responses against per-topic keys. Micro averaging pools
// counts over topics; macro averaging takes the mean of per-topic
// precision, recall and F1 (topics with fewer than two mentions are left out
// of the BLANC mean). Throws Error(kTopicMismatch) if the topic sets differ.
MetricScores ScoreRun(const TopicPartitions& responses, const TopicPartitions& keys,
                      Averaging averaging = Averaging::kMicro);

struct ScoreRow {
  std::string label;
  MetricScores scores;
};

// Text table with one p/r/F1 column group per selected metric; values are
// percentages with two decimals.
std::string FormatScoreTable(const std::vector<ScoreRow>& rows,
                             const std::vector<Metric>& metrics);
// Same content as JSON (percentages, unrounded).
std::string ScoreTableJson(const std::vector<ScoreRow>& rows,
                           const std::vector<Metric>& metrics);

}  // namespace evcoref

#endif  // EVCOREF_METRICS_H_
