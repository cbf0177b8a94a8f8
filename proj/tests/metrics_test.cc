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

#include <random>

#include <gtest/gtest.h>

#include "evcoref/metrics.h"
#include "support/expect_error.h"
#include "support/oracles.h"

namespace evcoref {
namespace {

constexpr double kTol = 1e-9;

Partition P(std::vector<std::vector<std::string>> blocks) { return Partition(std::move(blocks)); }

void ExpectScore(const PartitionScore& s, double p, double r) {
  EXPECT_NEAR(s.precision, p, kTol);
  EXPECT_NEAR(s.recall, r, kTol);
  EXPECT_NEAR(s.f1, p + r > 0 ? 2 * p * r / (p + r) : 0.0, kTol);
}

TEST(MucTest, Fixtures) {
  ExpectScore(Muc(P({{"a", "b"}, {"c"}, {"d"}}), P({{"a", "b", "c"}, {"d"}})), 1.0, 0.5);
  ExpectScore(Muc(P({{"a", "b", "c"}, {"d"}}), P({{"a", "b", "c"}, {"d"}})), 1, 1);
  ExpectScore(Muc(P({{"a"}, {"b"}}), P({{"a"}, {"b"}})), 1, 1);
}

TEST(MucTest, OneSidedDegenerateScoresZero) {
  ExpectScore(Muc(P({{"a"}, {"b"}}), P({{"a", "b"}})), 0, 0);
  ExpectScore(Muc(P({{"a", "b"}}), P({{"a"}, {"b"}})), 0, 0);
}

TEST(BCubedTest, Fixtures) {
  ExpectScore(BCubed(P({{"a"}, {"b"}, {"c"}}), P({{"a", "b"}, {"c"}})), 1.0, 2.0 / 3);
  ExpectScore(BCubed(P({{"a", "b"}, {"c", "d"}}), P({{"a", "b", "c", "d"}})), 1.0, 0.5);
  ExpectScore(BCubed(P({{"a", "b"}, {"c"}}), P({{"a", "b"}, {"c"}})), 1, 1);
}

TEST(CeafMTest, Fixtures) {
  ExpectScore(CeafM(P({{"a", "b"}, {"c", "d"}}), P({{"a", "b", "c"}, {"d"}})), 0.75, 0.75);
  EXPECT_EQ(AlignCeafM(P({{"a", "b"}, {"c", "d"}}), P({{"a", "b", "c"}, {"d"}})).total, 3);
  ExpectScore(CeafM(P({{"a", "b"}}), P({{"a"}, {"b"}})), 0.5, 0.5);
  ExpectScore(CeafM(P({{"a", "b"}, {"c"}}), P({{"a", "b"}, {"c"}})), 1, 1);
}

TEST(BlancTest, Fixtures) {
  const PartitionScore s = Blanc(P({{"a", "b", "c", "d"}}), P({{"a", "b"}, {"c", "d"}}));
  EXPECT_NEAR(s.precision, 1.0 / 6, kTol);
  EXPECT_NEAR(s.recall, 0.5, kTol);
  // Mean of the coref-side F1 (1/2) and the non-coref-side F1 (0).
  EXPECT_NEAR(s.f1, 0.25, kTol);
  ExpectScore(Blanc(P({{"a", "b"}, {"c"}}), P({{"a", "b"}, {"c"}})), 1, 1);
  ExpectScore(Blanc(P({{"a"}, {"b"}, {"c"}}), P({{"a"}, {"b"}, {"c"}})), 1, 1);
}

TEST(BlancTest, NeedsTwoMentions) {
  EXPECT_ERROR_CODE(Blanc(P({{"a"}}), P({{"a"}})), ErrorCode::kTooFewMentions);
}

TEST(MetricsTest, UniverseMismatch) {
  EXPECT_ERROR_CODE(Muc(P({{"a", "b"}}), P({{"a", "c"}})), ErrorCode::kUniverseMismatch);
  EXPECT_ERROR_CODE(BCubed(P({{"a"}}), P({{"a", "c"}})), ErrorCode::kUniverseMismatch);
  EXPECT_ERROR_CODE(CeafM(P({{"a"}}), P({{"b"}})), ErrorCode::kUniverseMismatch);
  EXPECT_ERROR_CODE(Blanc(P({{"a", "b"}}), P({{"a", "c"}})), ErrorCode::kUniverseMismatch);
}

TEST(MaxWeightAssignmentTest, RectangularInputs) {
  const auto a = MaxWeightAssignment({{1, 5, 0}, {4, 4, 0}});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], 1u);
  EXPECT_EQ(a[1], 0u);
  const auto b = MaxWeightAssignment({{3}, {7}, {2}});
  EXPECT_FALSE(b[0].has_value());
  EXPECT_EQ(b[1], 0u);
  EXPECT_FALSE(b[2].has_value());
}

class MetricOracleTest : public ::testing::TestWithParam<int> {};

TEST_P(MetricOracleTest, AgreesWithOracles) {
  std::mt19937_64 rng(static_cast<uint64_t>(GetParam()));
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const Partition key = testing::RandomPartition(rng, n, 7);
    const Partition response = testing::RandomPartition(rng, n, 7);

    const auto muc = testing::MucOracle(response, key);
    ExpectScore(Muc(response, key), muc.precision, muc.recall);
    const auto b3 = testing::BCubedOracle(response, key);
    ExpectScore(BCubed(response, key), b3.precision, b3.recall);
    const auto blanc = testing::BlancOracle(response, key);
    const auto got = Blanc(response, key);
    EXPECT_NEAR(got.precision, blanc.precision, kTol);
    EXPECT_NEAR(got.recall, blanc.recall, kTol);
    EXPECT_EQ(AlignCeafM(response, key).total, testing::CeafMFactorialOracle(response, key));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MetricOracleTest, ::testing::Values(1, 2, 3));

TEST(MetricPropertyTest, PerfectResponseAndSwapSymmetry) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 20)(rng);
    const Partition key = testing::RandomPartition(rng, n, 6);
    for (Metric m : kAllMetrics) {
      const PartitionScore s = ScoreRun({{"t", key}}, {{"t", key}}, Averaging::kMicro).Get(m);
      EXPECT_DOUBLE_EQ(s.precision, 1.0);
      EXPECT_DOUBLE_EQ(s.recall, 1.0);
      EXPECT_DOUBLE_EQ(s.f1, 1.0);
    }
    // Swapping key and response swaps precision and recall.
    const Partition response = testing::RandomPartition(rng, n, 6);
    const auto a = Muc(response, key), b = Muc(key, response);
    EXPECT_NEAR(a.precision, b.recall, kTol);
    const auto c = BCubed(response, key), d = BCubed(key, response);
    EXPECT_NEAR(c.precision, d.recall, kTol);
    for (const auto& s : {a, c, CeafM(response, key), Blanc(response, key)}) {
      EXPECT_GE(s.precision, 0);
      EXPECT_LE(s.precision, 1 + kTol);
      EXPECT_GE(s.recall, 0);
      EXPECT_LE(s.recall, 1 + kTol);
    }
  }
}

TEST(ScoreRunTest, MicroPoolsCounts) {
  const TopicPartitions key = {{"t1", P({{"a", "b", "c"}, {"d"}})},
                               {"t2", P({{"x", "y"}, {"z"}})}};
  const TopicPartitions resp = {{"t1", P({{"a", "b"}, {"c"}, {"d"}})},
                                {"t2", P({{"x", "y"}, {"z"}})}};
  const MetricScores s = ScoreRun(resp, key, Averaging::kMicro);
  // MUC recall: (1 + 1) / (2 + 1).
  EXPECT_NEAR(s.muc.recall, 2.0 / 3, kTol);
  EXPECT_NEAR(s.muc.precision, 1.0, kTol);
  const MetricScores m = ScoreRun(resp, key, Averaging::kMacro);
  EXPECT_NEAR(m.muc.recall, (0.5 + 1.0) / 2, kTol);
}

TEST(ScoreRunTest, TopicMismatch) {
  EXPECT_ERROR_CODE(ScoreRun({{"t1", P({{"a"}})}}, {{"t2", P({{"a"}})}}, Averaging::kMicro),
                    ErrorCode::kTopicMismatch);
}

TEST(ScoreTableTest, PerfectRowPrints100) {
  const TopicPartitions key = {{"t", P({{"a", "b"}, {"c"}})}};
  const std::vector<ScoreRow> rows = {{"perfect", ScoreRun(key, key, Averaging::kMicro)}};
  const std::string table = FormatScoreTable(rows, {std::begin(kAllMetrics), std::end(kAllMetrics)});
  EXPECT_NE(table.find("MUC"), std::string::npos);
  EXPECT_NE(table.find("CEAF (M)"), std::string::npos);
  size_t count = 0;
  for (size_t pos = table.find("100.00"); pos != std::string::npos;
       pos = table.find("100.00", pos + 1)) {
    ++count;
  }
  EXPECT_EQ(count, 12u);
  const std::string json = ScoreTableJson(rows, {Metric::kMuc});
  EXPECT_NE(json.find("\"perfect\""), std::string::npos);
}

TEST(MetricFlagTest, RoundTrips) {
  for (Metric m : kAllMetrics) EXPECT_EQ(ParseMetricFlag(MetricFlag(m)), m);
  EXPECT_FALSE(ParseMetricFlag("ceafe").has_value());
}

}  // namespace
}  // namespace evcoref
