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
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "evcoref/metrics.h"
#include "evcoref/partition.h"

namespace evcoref {
namespace {

Partition RandomPartition(int n, int blocks, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::string>> out(static_cast<size_t>(blocks));
  for (int i = 0; i < n; ++i) out[rng() % out.size()].push_back("m" + std::to_string(i));
  std::erase_if(out, [](const auto& b) { return b.empty(); });
  return Partition(std::move(out));
}

void BM_CeafM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition key = RandomPartition(n, n / 4, 1);
  const Partition response = RandomPartition(n, n / 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(CeafM(response, key));
}
BENCHMARK(BM_CeafM)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

void BM_AllMetrics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TopicPartitions key, response;
  for (int t = 0; t < 40; ++t) {
    const std::string topic = "t" + std::to_string(t);
    key[topic] = RandomPartition(n, n / 5 + 1, 10 + static_cast<uint64_t>(t));
    response[topic] = RandomPartition(n, n / 3 + 1, 100 + static_cast<uint64_t>(t));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreRun(response, key, Averaging::kMicro));
  }
}
BENCHMARK(BM_AllMetrics)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_MaxWeightAssignment(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n));
  for (auto& row : w) {
    for (auto& x : row) x = static_cast<long long>(rng() % 50);
  }
  for (auto _ : state) benchmark::DoNotOptimize(MaxWeightAssignment(w));
}
BENCHMARK(BM_MaxWeightAssignment)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace evcoref
